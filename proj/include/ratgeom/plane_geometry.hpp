#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ratgeom/angle.hpp"
#include "ratgeom/certificate.hpp"
#include "ratgeom/family.hpp"

namespace ratgeom {

/// A labeled input point. Coordinates arrive as decimal or "num/den"
/// literals; the exact rational value of the literal is kept alongside the
/// high-precision floating view (approximation targets are inherently
/// inexact, but already-rational inputs must be recognized exactly).
struct InputPoint {
    std::string label;
    BigRat xq, yq;
    Real x, y;
};
using PointSet = std::vector<InputPoint>;

InputPoint make_input_point(std::string label, const BigRat& x, const BigRat& y);
InputPoint make_input_point(std::string label, const std::string& x, const std::string& y);

struct SearchBudget {
    int kmax = 120;              // multiples-of-P1 depth per search round
    double time_seconds = 60.0;  // wall-clock advisory; 0 disables
};

/// Rational point (x, y) = ((u + a/u)/2, (u - a/u)/2) on x^2 - y^2 = a.
/// Throws ZeroInput when a = 0 or u = 0.
std::pair<BigRat, BigRat> hyperbola_point(const BigRat& a, const BigRat& u);

/// Point R on the line L through P (origin) at angle `angle` from PQ,
/// |PQ| = r, parametrized by u > 0: with a = r^2 sin^2,
/// s = (u - a/u)/2, returns q = PR = r cos + s (signed position along L)
/// and p = QR = (u + a/u)/2. Satisfies p^2 = q^2 + r^2 - 2 q r cos exactly;
/// u -> q is strictly increasing.
struct LinePQPoint {
    BigRat q, p;
};
LinePQPoint line_rational_distance_point(const BigRat& r, const RationalAngle& angle,
                                         const BigRat& u);

/// The section-5 construction: a rational quartic point (x, y) at params
/// (m, n) = (cot theta, c/a) yields the intersection B of a line through
/// A = (-a, 0) and a line through C = (c, 0) lying on L (the line through
/// O at `angle`), with BO, BA, BC all rational. Returns the certificate
/// over {A, O, C, B}. Throws DegeneratePoint for x in {0, +-1} and
/// parallel-line cases, NotOnQuartic, SquareRootNotRational.
RationalCertificate quartic_point_to_B(const FamilyParams& params, const BigRat& a,
                                       const BigRat& c, const RationalAngle& angle,
                                       const BigRat& x, const BigRat& y);

/// Rational triangle with rational area within eps of the input (labeled
/// max-distance). The vertex opposite the largest side is preserved
/// exactly and the output base stays parallel to the input base. Exactly
/// collinear input degrades to a rational collinear 3-set.
ApproxResult approx_triangle(const PointSet& tri, const Real& eps);

/// Rational parallelogram (all four sides, both diagonals and area
/// rational) within eps where the search succeeds; flagged best-effort
/// certificate otherwise. Throws NotAParallelogram.
ApproxResult approx_parallelogram(const PointSet& quad, const Real& eps,
                                  const SearchBudget& budget = {});

/// Rational 4-set (all six distances rational, rational area) within eps
/// of an arbitrary quadrilateral, via the three-step diagonal construction
/// with the multiples-of-P1 search; flagged best-effort on budget
/// exhaustion. Convex, concave, three-collinear and fully collinear
/// configurations are all handled.
ApproxResult approx_quadrilateral(const PointSet& quad, const Real& eps,
                                  const SearchBudget& budget = {});

enum class EulerSign { upper, lower };

/// Triangle with side proportions
///   a : b : c = (r^2+s^2)/rs : (ps +- rq)(pr -+ qs)/pqrs : (p^2+q^2)/pq
/// scaled to the smallest integer sides; the area is rational and the
/// certificate carries it. Throws NotATriangle for invalid combinations.
RationalCertificate euler_triangle(long p, long q, long r, long s, EulerSign sign);

/// The symmetric quadrilateral relation:
/// ((xi+c)^2-1)/2xi * ((x-c)^2-1)/2x == ((nu-c)^2-1)/2nu * ((y+c)^2-1)/2y.
/// Throws ZeroDenominator when xi, nu, x or y is zero.
bool kummer_check(const BigRat& xi, const BigRat& nu, const BigRat& x, const BigRat& y,
                  const BigRat& c);

}  // namespace ratgeom
