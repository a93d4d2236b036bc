#pragma once

// Shared internals of the approximation pipelines. Not installed.

#include <algorithm>
#include <chrono>
#include <optional>

#include "ratgeom/errors.hpp"
#include "ratgeom/plane_geometry.hpp"

namespace ratgeom::detail {

struct Vec2 {
    Real x{0}, y{0};
};

inline Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(const Real& s, const Vec2& v) { return {s * v.x, s * v.y}; }
inline Real dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Real cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Real norm(const Vec2& v) { return sqrt(dot(v, v)); }
inline Vec2 normalized(const Vec2& v) {
    Real n = norm(v);
    return {v.x / n, v.y / n};
}

inline Vec2 vec(const InputPoint& p) { return {p.x, p.y}; }

/// Canonical-frame coordinates of z relative to origin o and unit x-axis u.
inline Vec2 to_frame(const Vec2& z, const Vec2& o, const Vec2& u) {
    Vec2 d = z - o;
    return {dot(d, u), cross(u, d)};
}

inline Vec2 frame_apply(const Frame& f, const BigRat& px, const BigRat& py) {
    Real c = cos(f.angle), s = sin(f.angle);
    Real X = to_real(px), Y = to_real(py);
    return {c * X - s * Y + f.dx, s * X + c * Y + f.dy};
}

inline Frame make_frame(const Vec2& x_axis, const Vec2& origin) {
    return {atan2(x_axis.y, x_axis.x), origin.x, origin.y};
}

inline Real dist2(const Vec2& a, const Vec2& b) {
    Real dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Acceptance threshold: strictly below eps with the guard margin 2^-20.
inline Real guarded(const Real& eps) { return eps * (Real(1) - ldexp(Real(1), -20)); }

inline BigRat must_sqrt(const BigRat& v, const char* what) {
    auto r = is_perfect_square(v);
    if (!r) throw SquareRootNotRational(std::string("expected a rational square root: ") + what);
    return *r;
}

/// Exact orientation of (a -> b -> c); sign of the cross product.
inline int orient(const InputPoint& a, const InputPoint& b, const InputPoint& c) {
    return ((b.xq - a.xq) * (c.yq - a.yq) - (c.xq - a.xq) * (b.yq - a.yq)).sign();
}

void validate_point_set(const PointSet& pts, std::size_t expected, const Real& eps);

/// Identity certificate when every pairwise distance is already rational.
std::optional<RationalCertificate> already_rational_certificate(const PointSet& pts);

/// Rational positions along a line for exactly collinear input (3 or 4
/// points); gap < eps always reachable.
ApproxResult approx_collinear_set(const PointSet& pts, const Real& eps);

/// Exact rational C_Q tangents (values t with 1 + t^2 a rational square)
/// inside [lo, hi] with Pythagorean hypotenuse <= hyp_max, sorted by
/// height then value.
std::vector<BigRat> cq_tangents_in(double lo, double hi, long hyp_max);

class Deadline {
public:
    explicit Deadline(double seconds);
    bool exceeded() const;

private:
    double limit_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace ratgeom::detail
