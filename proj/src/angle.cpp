#include "ratgeom/angle.hpp"

#include <stdexcept>
#include <vector>

#include "ratgeom/errors.hpp"

namespace ratgeom {

BigRat simplest_rational_between(BigRat lo, BigRat hi) {
    if (hi < lo) std::swap(lo, hi);
    if (lo.sign() <= 0 && hi.sign() >= 0) return BigRat(0);
    if (hi.sign() < 0) return -simplest_rational_between(-hi, -lo);

    // 0 < lo <= hi: build the continued fraction until an integer fits.
    std::vector<BigInt> terms;
    for (;;) {
        BigInt fl = floor(lo);
        if (BigRat(fl) == lo) {
            terms.push_back(fl);
            break;
        }
        if (BigRat(fl + 1) <= hi) {
            terms.push_back(fl + 1);
            break;
        }
        terms.push_back(fl);
        BigRat nlo = BigRat(1) / (hi - BigRat(fl));
        BigRat nhi = BigRat(1) / (lo - BigRat(fl));
        lo = nlo;
        hi = nhi;
    }
    BigRat r(terms.back());
    for (auto it = terms.rbegin() + 1; it != terms.rend(); ++it)
        r = BigRat(*it) + BigRat(1) / r;
    return r;
}

BigRat rational_near(const Real& x, const Real& delta) {
    if (delta <= 0) throw std::invalid_argument("rational_near: delta must be positive");
    return simplest_rational_between(dyadic_rational(x - delta), dyadic_rational(x + delta));
}

RationalAngle::RationalAngle(BigRat c, BigRat s) : cos(std::move(c)), sin(std::move(s)) {
    if (cos * cos + sin * sin != BigRat(1))
        throw std::invalid_argument("RationalAngle: cos^2 + sin^2 != 1");
}

Real RationalAngle::radians() const { return atan2(to_real(sin), to_real(cos)); }

BigRat RationalAngle::tan() const { return sin / cos; }

BigRat RationalAngle::cot() const { return cos / sin; }

RationalAngle RationalAngle::compose(const RationalAngle& o) const {
    return {cos * o.cos - sin * o.sin, sin * o.cos + cos * o.sin};
}

RationalAngle angle_from_tangent_half(const BigRat& t) {
    BigRat t2 = t * t;
    BigRat den = BigRat(1) + t2;
    return {(BigRat(1) - t2) / den, (t + t) / den};
}

RationalAngle rational_angle_near(const Real& theta, const Real& delta) {
    return rational_angle_near_if(theta, delta, [](const RationalAngle&) { return true; });
}

RationalAngle rational_angle_near_if(const Real& theta, const Real& delta,
                                     const std::function<bool(const RationalAngle&)>& pred) {
    if (delta <= 0) throw std::invalid_argument("rational_angle_near: delta must be positive");
    const Real tn = wrap_angle(theta);
    const Real t_star = tan(tn / 2);

    auto admit = [&](const BigRat& t) -> bool {
        RationalAngle a = angle_from_tangent_half(t);
        return abs(wrap_angle(a.radians() - tn)) < delta && pred(a);
    };

    Real w = delta * (1 + t_star * t_star) / 2;
    for (int iter = 0; iter < 220; ++iter) {
        BigRat t = rational_near(t_star, w);
        if (admit(t)) return angle_from_tangent_half(t);
        // The simplest candidate was rejected (usually by pred); probe the
        // two half-windows flanking it before shrinking.
        BigRat lo = dyadic_rational(t_star - w), hi = dyadic_rational(t_star + w);
        if (lo < t) {
            BigRat tl = simplest_rational_between(lo, lo + (t - lo) * BigRat(1023, 1024));
            if (tl != t && admit(tl)) return angle_from_tangent_half(tl);
        }
        if (t < hi) {
            BigRat tr = simplest_rational_between(hi - (hi - t) * BigRat(1023, 1024), hi);
            if (tr != t && admit(tr)) return angle_from_tangent_half(tr);
        }
        w /= 2;
    }
    throw Error("rational_angle_near: no admissible angle found");
}

}  // namespace ratgeom
