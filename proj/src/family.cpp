#include "ratgeom/family.hpp"

#include "ratgeom/errors.hpp"

namespace ratgeom {

QuarticCurve quartic_of(const FamilyParams& fp) {
    const BigRat &m = fp.m, &n = fp.n;
    BigRat p = BigRat(4) * (BigRat(1) + n) * m;
    BigRat q = BigRat(4) * pow(BigRat(1) + n, 2) * m * m + BigRat(4) * n * n - BigRat(2);
    return {p, q, -p};
}

CubicCurve cubic_of(const FamilyParams& fp) {
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    BigRat A = one - BigRat(2) * n * n + pow(one + n, 2) * m * m;
    BigRat B = -n * n * (one + n) * ((one - n) + BigRat(2) * (n + one) * m * m);
    BigRat C = pow(n, 4) * pow(one + n, 2) * m * m;
    return {A, B, C};
}

QFactorization q_factorization(const FamilyParams& fp) {
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    BigRat b = m * m * pow(one + n, 2) - n * n + one;
    BigRat c = -(m * m * n * n * pow(one + n, 2));
    return {n * n, b, c};
}

BigRat family_discriminant(const FamilyParams& fp) {
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    return pow(n, 4) * pow(one + n, 2) * (one + m * m) *
           (pow(one - n, 2) + pow(one + n, 2) * m * m);
}

SpecialPoints special_points(const FamilyParams& fp) {
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    BigRat w1 = m * (one + n);
    CurvePoint P1 = CurvePoint::affine(n * n - one, w1);
    CurvePoint P2 = CurvePoint::affine(BigRat(0), n * n * (one + n) * m);
    CurvePoint P3 = CurvePoint::affine(n * n, BigRat(0));
    return {P1, P2, P3, P1.negated()};
}

CurvePoint quartic_to_cubic(const FamilyParams& fp, const BigRat& x, const BigRat& y) {
    if (!quartic_of(fp).contains(x, y)) throw NotOnQuartic();
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    BigRat mn1 = (one + n) * m;
    BigRat U = -(y - x * x - BigRat(2) * mn1 * x + (one - BigRat(2) * n * n)) / BigRat(2);
    if (U.is_zero())
        throw ExcludedPoint("quartic_to_cubic: (x, y) lies on the excluded U = 0 fiber");
    BigRat V = x * U;
    BigRat W = V + mn1 * U - n * n * mn1;
    return CurvePoint::affine(std::move(U), std::move(W));
}

std::pair<BigRat, BigRat> cubic_to_quartic(const FamilyParams& fp, const CurvePoint& pt) {
    if (pt.is_infinity())
        throw ExcludedPoint("cubic_to_quartic: infinity has no quartic preimage");
    if (!contains(cubic_of(fp), pt)) throw NotOnCubic();
    if (pt.U().is_zero())
        throw ExcludedPoint("cubic_to_quartic: the points +-P2 (U = 0) are excluded");
    const BigRat &m = fp.m, &n = fp.n;
    BigRat one(1);
    BigRat mn1 = (one + n) * m;
    BigRat V = pt.W() - mn1 * pt.U() + n * n * mn1;
    BigRat x = V / pt.U();
    BigRat y = -BigRat(2) * pt.U() + x * x + BigRat(2) * mn1 * x + BigRat(2) * n * n - one;
    return {std::move(x), std::move(y)};
}

std::optional<int> torsion_scan(const FamilyParams& fp) {
    if (fp.is_singular()) throw SingularParams();
    return torsion_order(cubic_of(fp), special_points(fp).P1);
}

bool oval_membership_check(const FamilyParams& fp) {
    if (fp.is_singular()) throw SingularParams();
    QFactorization f = q_factorization(fp);
    auto quad_at = [&](const BigRat& U) { return (U + f.b) * U + f.c; };
    BigRat zero(0);
    return quad_at(BigRat(0)) <= zero && quad_at(fp.n * fp.n - BigRat(1)) <= zero;
}

}  // namespace ratgeom
