#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratgeom/bigrat.hpp"
#include "ratgeom/real.hpp"

namespace ratgeom {

using Json = nlohmann::ordered_json;

struct LabeledPoint {
    std::string label;
    BigRat x, y;
};

/// Rigid motion mapping the certificate's canonical frame into the user's
/// coordinates: p_user = R(angle) p_canonical + (dx, dy).
struct Frame {
    Real angle{0}, dx{0}, dy{0};
};

using LabelPair = std::pair<std::string, std::string>;

/// Exact record of a rational point set: coordinates in a canonical frame
/// where they are rational, every pairwise distance as an exact rational,
/// and (for polygon certificates) the exact area. The listing order of
/// points is the polygon's cyclic order; the area, when present, is the
/// shoelace value of that cycle.
struct RationalCertificate {
    std::vector<LabeledPoint> points;
    std::map<LabelPair, BigRat> distances;  // keys normalized (from < to)
    std::optional<BigRat> area;
    Frame frame;
};

struct HausdorffGap {
    Real value{0};
};

struct ApproxResult {
    RationalCertificate cert;
    HausdorffGap gap;
    bool budget_exhausted{false};
};

struct VerifyResult {
    bool ok{true};
    std::vector<std::string> reasons;
    explicit operator bool() const { return ok; }
};

/// Checks, entirely in exact arithmetic: labels unique, every unordered
/// pair of points listed with a nonnegative rational distance d satisfying
/// d^2 = (xi-xj)^2 + (yi-yj)^2, and area (when present) equal to the
/// shoelace value of the listed cycle. Never throws; failures come back
/// with reasons.
VerifyResult certificate_verify(const RationalCertificate& cert);

/// |shoelace|/2 of the listed cycle, exact.
BigRat shoelace_area(const std::vector<LabeledPoint>& points);

/// Exact Euclidean distance between two points when it is rational.
std::optional<BigRat> exact_distance(const LabeledPoint& a, const LabeledPoint& b);

LabelPair normalized_pair(const std::string& a, const std::string& b);

Json certificate_to_json(const RationalCertificate& cert, const HausdorffGap& gap,
                         bool budget_exhausted);
/// Parses the schema written by certificate_to_json; gap/budget fields are
/// optional on input.
RationalCertificate certificate_from_json(const Json& j, Real* gap_out = nullptr,
                                          bool* budget_out = nullptr);

}  // namespace ratgeom
