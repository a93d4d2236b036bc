#pragma once

#include <optional>
#include <utility>

#include "ratgeom/bigrat.hpp"
#include "ratgeom/elliptic.hpp"

namespace ratgeom {

/// The pair (m, n) = (cot theta, cot beta) driving the two-parameter
/// quartic/cubic curve family.
struct FamilyParams {
    BigRat m, n;

    /// Singular over the rationals iff n = 0, n = -1, or (m, n) = (0, 1).
    bool is_singular() const {
        return n.is_zero() || n == BigRat(-1) || (m.is_zero() && n == BigRat(1));
    }
};

/// y^2 = x^4 + p x^3 + q x^2 + r x + 1, with r = -p throughout the family.
struct QuarticCurve {
    BigRat p, q, r;

    BigRat eval(const BigRat& x) const {
        return (((x + p) * x + q) * x + r) * x + BigRat(1);
    }
    bool contains(const BigRat& x, const BigRat& y) const { return y * y == eval(x); }
};

/// p = 4(1+n)m, q = 4(1+n)^2 m^2 + 4n^2 - 2, r = -4(1+n)m.
QuarticCurve quartic_of(const FamilyParams& params);

/// A = 1 - 2n^2 + (1+n)^2 m^2,
/// B = -n^2 (1+n) ((1-n) + 2(n+1) m^2),
/// C = n^4 (1+n)^2 m^2  (a rational square by construction).
CubicCurve cubic_of(const FamilyParams& params);

/// Q(U) = (U - root)(U^2 + b U + c) with root = n^2,
/// b = m^2 (1+n)^2 - n^2 + 1, c = -m^2 n^2 (1+n)^2.
struct QFactorization {
    BigRat root;
    BigRat b, c;
};
QFactorization q_factorization(const FamilyParams& params);

/// Closed form n^4 (1+n)^2 (1+m^2) ((1-n)^2 + (1+n)^2 m^2); equals the
/// polynomial discriminant of cubic_of exactly.
BigRat family_discriminant(const FamilyParams& params);

/// P1 = (U = n^2-1, W = m(1+n));  P2 = (0, n^2(1+n)m);
/// P3 = (n^2, 0) (2-torsion);     P4 = -P1.
/// P1, P2, P3 lie on the line W + (1+n)m U = n^2(1+n)m.
struct SpecialPoints {
    CurvePoint P1, P2, P3, P4;
};
SpecialPoints special_points(const FamilyParams& params);

/// Birational map quartic -> cubic:
/// U = -(y - x^2 - 2(1+n)m x + (1-2n^2))/2, V = xU,
/// W = V + (1+n)m U - n^2(1+n)m.
/// Throws NotOnQuartic; ExcludedPoint when U = 0 (the bijection exception).
CurvePoint quartic_to_cubic(const FamilyParams& params, const BigRat& x, const BigRat& y);

/// Inverse map; throws NotOnCubic; ExcludedPoint for infinity and the
/// U = 0 fiber (the points +-P2).
std::pair<BigRat, BigRat> cubic_to_quartic(const FamilyParams& params, const CurvePoint& pt);

/// torsion_order of P1 on cubic_of(params); empty means P1 has infinite
/// order, i.e. the parameters avoid the exceptional torsion sets.
/// Throws SingularParams.
std::optional<int> torsion_scan(const FamilyParams& params);

/// Certifies +-P1, +-P2 lie on the oval component: the quadratic factor of
/// Q(U) evaluated at U = 0 and U = n^2 - 1 is <= 0, checked exactly.
/// Throws SingularParams.
bool oval_membership_check(const FamilyParams& params);

}  // namespace ratgeom
