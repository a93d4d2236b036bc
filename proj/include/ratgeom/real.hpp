#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>

#include <limits>

#include "ratgeom/bigrat.hpp"

namespace ratgeom {

/// Working floating format for approximation targets and tolerances
/// (~168 fractional bits). All certified outputs stay exact BigRat;
/// Real only ever measures gaps and guides the choice of rationals.
using Real = boost::multiprecision::cpp_bin_float_50;

inline Real to_real(const BigRat& q) {
    return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

inline Real real_pi() { return boost::math::constants::pi<Real>(); }

/// Wrap into (-pi, pi].
inline Real wrap_angle(Real a) {
    const Real two_pi = 2 * real_pi();
    a -= two_pi * floor(a / two_pi + Real(0.5));
    if (a <= -real_pi()) a += two_pi;
    return a;
}

/// Exact rational value of a Real (binary floats are dyadic rationals).
inline BigRat dyadic_rational(const Real& x) {
    if (x == 0) return BigRat(0);
    using boost::multiprecision::cpp_int;
    int e = 0;
    Real m = frexp(x, &e);
    constexpr int bits = std::numeric_limits<Real>::digits;
    m = ldexp(m, bits);
    cpp_int mi = m.convert_to<cpp_int>();
    BigInt num(mi.str());
    long shift = static_cast<long>(e) - bits;
    BigInt p2;
    mpz_ui_pow_ui(p2.get_mpz_t(), 2, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    return shift >= 0 ? BigRat(num * p2) : BigRat(num, p2);
}

/// Simplest rational in [lo, hi] (minimal denominator, then numerator),
/// by the continued-fraction interval walk.
BigRat simplest_rational_between(BigRat lo, BigRat hi);

/// Minimal-height rational within delta of x.
BigRat rational_near(const Real& x, const Real& delta);

}  // namespace ratgeom
