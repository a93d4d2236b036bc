#pragma once

#include <optional>

#include "ratgeom/bigrat.hpp"

namespace ratgeom {

/// W^2 = U^3 + A U^2 + B U + C over the rationals. Singular curves are
/// representable; the group operations reject them.
struct CubicCurve {
    BigRat A, B, C;
};

/// Affine point (U, W) or the point at infinity.
class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(BigRat U, BigRat W) { return CurvePoint(std::move(U), std::move(W)); }

    bool is_infinity() const { return inf_; }
    const BigRat& U() const;
    const BigRat& W() const;

    CurvePoint negated() const { return inf_ ? *this : affine(U_, -W_); }

    bool operator==(const CurvePoint& o) const {
        if (inf_ || o.inf_) return inf_ == o.inf_;
        return U_ == o.U_ && W_ == o.W_;
    }

private:
    CurvePoint() : inf_(true) {}
    CurvePoint(BigRat U, BigRat W) : inf_(false), U_(std::move(U)), W_(std::move(W)) {}
    bool inf_;
    BigRat U_, W_;
};

/// True iff pt is infinity or satisfies the curve equation exactly.
bool contains(const CubicCurve& curve, const CurvePoint& pt);

/// Discriminant of U^3 + A U^2 + B U + C:
/// 18ABC - 4A^3 C + A^2 B^2 - 4B^3 - 27C^2. Zero iff repeated roots.
BigRat discriminant(const CubicCurve& curve);

bool is_singular(const CubicCurve& curve);

/// Chord-and-tangent group law with infinity as identity.
/// Throws SingularCurve / PointNotOnCurve.
CurvePoint add(const CubicCurve& curve, const CurvePoint& P, const CurvePoint& Q);

/// Group law without membership or singularity checks; for inner loops
/// whose inputs are already known to lie on a nonsingular curve.
CurvePoint add_unchecked(const CubicCurve& curve, const CurvePoint& P, const CurvePoint& Q);

/// kP by double-and-add; k may be negative or zero.
CurvePoint scalar_mul(const CubicCurve& curve, long k, const CurvePoint& P);

/// Least k with kP = infinity, scanning k = 1..cap; empty means infinite
/// order (by Mazur's bound no rational point has order 11 or above 12).
std::optional<int> torsion_order(const CubicCurve& curve, const CurvePoint& P, int cap = 12);

/// Exactly evaluated criterion for three distinct real roots:
/// A^2 - 3B > 0 and -A^2 B^2 + 4B^3 + 4A^3 C - 18ABC + 27C^2 < 0.
bool has_three_distinct_real_roots(const CubicCurve& curve);

/// j-invariant, normalized so that j(W^2 = U^3 + U) = 1728:
/// j = 256 (A^2 - 3B)^3 / disc. Throws SingularCurve.
BigRat j_invariant(const CubicCurve& curve);

}  // namespace ratgeom
