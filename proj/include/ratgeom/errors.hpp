#pragma once

#include <stdexcept>
#include <string>

namespace ratgeom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularCurve : Error {
    SingularCurve() : Error("curve is singular (zero discriminant)") {}
    explicit SingularCurve(const std::string& what) : Error(what) {}
};

struct PointNotOnCurve : Error {
    PointNotOnCurve() : Error("point does not satisfy the curve equation") {}
    explicit PointNotOnCurve(const std::string& what) : Error(what) {}
};

struct SingularParams : Error {
    SingularParams() : Error("family parameters lie on the singular locus") {}
    explicit SingularParams(const std::string& what) : Error(what) {}
};

struct NotOnQuartic : Error {
    NotOnQuartic() : Error("point does not satisfy the quartic equation") {}
};

struct NotOnCubic : Error {
    NotOnCubic() : Error("point does not satisfy the cubic equation") {}
};

// Bijection exceptions of the quartic <-> cubic correspondence.
struct ExcludedPoint : Error {
    explicit ExcludedPoint(const std::string& what) : Error(what) {}
};

// Trivial quartic solutions (x in {0, +-1}) and parallel-line cases that
// yield no usable intersection point B.
struct DegeneratePoint : Error {
    explicit DegeneratePoint(const std::string& what) : Error(what) {}
};

// A distance that should have been certified rational was not; signals a
// precondition violation upstream, never expected for valid quartic points.
struct SquareRootNotRational : Error {
    explicit SquareRootNotRational(const std::string& what) : Error(what) {}
};

struct ZeroInput : Error {
    explicit ZeroInput(const std::string& what) : Error(what) {}
};

struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what) : Error(what) {}
};

struct NotATriangle : Error {
    explicit NotATriangle(const std::string& what) : Error(what) {}
};

struct NotAParallelogram : Error {
    explicit NotAParallelogram(const std::string& what) : Error(what) {}
};

}  // namespace ratgeom
