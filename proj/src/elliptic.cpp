#include "ratgeom/elliptic.hpp"

#include "ratgeom/errors.hpp"

namespace ratgeom {

const BigRat& CurvePoint::U() const {
    if (inf_) throw Error("CurvePoint: infinity has no affine coordinates");
    return U_;
}

const BigRat& CurvePoint::W() const {
    if (inf_) throw Error("CurvePoint: infinity has no affine coordinates");
    return W_;
}

static BigRat eval_cubic(const CubicCurve& c, const BigRat& U) {
    return ((U + c.A) * U + c.B) * U + c.C;
}

bool contains(const CubicCurve& curve, const CurvePoint& pt) {
    if (pt.is_infinity()) return true;
    return pt.W() * pt.W() == eval_cubic(curve, pt.U());
}

BigRat discriminant(const CubicCurve& c) {
    const BigRat &A = c.A, &B = c.B, &C = c.C;
    return BigRat(18) * A * B * C - BigRat(4) * A * A * A * C + A * A * B * B -
           BigRat(4) * B * B * B - BigRat(27) * C * C;
}

bool is_singular(const CubicCurve& curve) { return discriminant(curve).is_zero(); }

CurvePoint add_unchecked(const CubicCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    const BigRat &x0 = P.U(), &y0 = P.W(), &x1 = Q.U(), &y1 = Q.W();
    BigRat lambda;
    if (x0 == x1) {
        if (y0 == -y1) return CurvePoint::infinity();
        // tangent; y0 = y1 != 0 here since both points satisfy the curve
        lambda = (BigRat(3) * x0 * x0 + (curve.A + curve.A) * x0 + curve.B) / (y0 + y0);
    } else {
        lambda = (y1 - y0) / (x1 - x0);
    }
    BigRat X = -curve.A + lambda * lambda - x1 - x0;
    BigRat Y = -y0 - (X - x0) * lambda;
    return CurvePoint::affine(std::move(X), std::move(Y));
}

CurvePoint add(const CubicCurve& curve, const CurvePoint& P, const CurvePoint& Q) {
    if (is_singular(curve)) throw SingularCurve();
    if (!contains(curve, P) || !contains(curve, Q)) throw PointNotOnCurve();
    return add_unchecked(curve, P, Q);
}

CurvePoint scalar_mul(const CubicCurve& curve, long k, const CurvePoint& P) {
    if (is_singular(curve)) throw SingularCurve();
    if (!contains(curve, P)) throw PointNotOnCurve();
    CurvePoint base = k < 0 ? P.negated() : P;
    unsigned long n = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    CurvePoint acc = CurvePoint::infinity();
    while (n) {
        if (n & 1) acc = add_unchecked(curve, acc, base);
        n >>= 1;
        if (n) base = add_unchecked(curve, base, base);
    }
    return acc;
}

std::optional<int> torsion_order(const CubicCurve& curve, const CurvePoint& P, int cap) {
    if (is_singular(curve)) throw SingularCurve();
    if (!contains(curve, P)) throw PointNotOnCurve();
    CurvePoint acc = CurvePoint::infinity();
    for (int k = 1; k <= cap; ++k) {
        acc = add_unchecked(curve, acc, P);
        if (acc.is_infinity()) return k;
    }
    return std::nullopt;
}

bool has_three_distinct_real_roots(const CubicCurve& c) {
    const BigRat &A = c.A, &B = c.B, &C = c.C;
    if (A * A - BigRat(3) * B <= BigRat(0)) return false;
    BigRat second = -(A * A * B * B) + BigRat(4) * B * B * B + BigRat(4) * A * A * A * C -
                    BigRat(18) * A * B * C + BigRat(27) * C * C;
    return second < BigRat(0);
}

BigRat j_invariant(const CubicCurve& c) {
    BigRat disc = discriminant(c);
    if (disc.is_zero()) throw SingularCurve();
    BigRat t = c.A * c.A - BigRat(3) * c.B;
    return BigRat(256) * t * t * t / disc;
}

}  // namespace ratgeom
