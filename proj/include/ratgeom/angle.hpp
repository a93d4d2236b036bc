#pragma once

#include <functional>

#include "ratgeom/bigrat.hpp"
#include "ratgeom/real.hpp"

namespace ratgeom {

/// A point (cos, sin) on the unit circle with both coordinates rational,
/// i.e. an angle in C_Q. cos^2 + sin^2 = 1 holds exactly by construction.
struct RationalAngle {
    BigRat cos;
    BigRat sin;

    RationalAngle(BigRat c, BigRat s);

    Real radians() const;
    BigRat tan() const;  // sin/cos, throws ZeroDenominator when cos = 0
    BigRat cot() const;  // cos/sin, throws ZeroDenominator when sin = 0

    /// Angle addition; C_Q is closed under it.
    RationalAngle compose(const RationalAngle& o) const;
    RationalAngle negated() const { return {cos, -sin}; }

    bool operator==(const RationalAngle& o) const { return cos == o.cos && sin == o.sin; }
};

/// Tangent-half-angle parametrization of the rational unit circle:
/// t -> ((1-t^2)/(1+t^2), 2t/(1+t^2)).
RationalAngle angle_from_tangent_half(const BigRat& t);

/// A RationalAngle within delta radians of theta, found by walking
/// minimal-height rationals t near tan(theta/2) (Stern-Brocot order)
/// and mapping through angle_from_tangent_half.
RationalAngle rational_angle_near(const Real& theta, const Real& delta);

/// Same, but the result must additionally satisfy pred (used by the
/// geometry pipelines to require e.g. nonzero sine and cosine).
RationalAngle rational_angle_near_if(const Real& theta, const Real& delta,
                                     const std::function<bool(const RationalAngle&)>& pred);

}  // namespace ratgeom
