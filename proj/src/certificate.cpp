#include "ratgeom/certificate.hpp"

#include <set>

#include "ratgeom/errors.hpp"

namespace ratgeom {

LabelPair normalized_pair(const std::string& a, const std::string& b) {
    return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

BigRat shoelace_area(const std::vector<LabeledPoint>& pts) {
    BigRat s(0);
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % n];
        s += p.x * q.y - q.x * p.y;
    }
    return abs(s) / BigRat(2);
}

std::optional<BigRat> exact_distance(const LabeledPoint& a, const LabeledPoint& b) {
    BigRat dx = a.x - b.x, dy = a.y - b.y;
    return is_perfect_square(dx * dx + dy * dy);
}

VerifyResult certificate_verify(const RationalCertificate& cert) {
    VerifyResult res;
    auto fail = [&](std::string why) {
        res.ok = false;
        res.reasons.push_back(std::move(why));
    };

    std::set<std::string> labels;
    for (const auto& p : cert.points)
        if (!labels.insert(p.label).second) fail("duplicate label '" + p.label + "'");

    auto find = [&](const std::string& l) -> const LabeledPoint* {
        for (const auto& p : cert.points)
            if (p.label == l) return &p;
        return nullptr;
    };

    // Every unordered pair must be listed exactly once.
    const std::size_t n = cert.points.size();
    if (cert.distances.size() != n * (n - 1) / 2)
        fail("expected " + std::to_string(n * (n - 1) / 2) + " pairwise distances, got " +
             std::to_string(cert.distances.size()));

    for (const auto& [pair, d] : cert.distances) {
        const LabeledPoint* a = find(pair.first);
        const LabeledPoint* b = find(pair.second);
        if (!a || !b) {
            fail("distance references unknown label '" + pair.first + "'-'" + pair.second + "'");
            continue;
        }
        if (d.sign() < 0) {
            fail("distance " + pair.first + "-" + pair.second + " is negative");
            continue;
        }
        BigRat dx = a->x - b->x, dy = a->y - b->y;
        if (d * d != dx * dx + dy * dy)
            fail("distance " + pair.first + "-" + pair.second + " = " + d.str() +
                 " does not satisfy the squared-distance identity");
    }

    if (cert.area) {
        BigRat expect = shoelace_area(cert.points);
        if (*cert.area != expect)
            fail("area " + cert.area->str() + " != shoelace value " + expect.str());
        if (cert.area->sign() < 0) fail("area is negative");
    }
    return res;
}

static double to_double(const Real& x) { return x.convert_to<double>(); }

Json certificate_to_json(const RationalCertificate& cert, const HausdorffGap& gap,
                         bool budget_exhausted) {
    Json j;
    j["points"] = Json::array();
    for (const auto& p : cert.points)
        j["points"].push_back({{"label", p.label}, {"x", p.x.str()}, {"y", p.y.str()}});
    j["distances"] = Json::array();
    for (const auto& [pair, d] : cert.distances)
        j["distances"].push_back({{"from", pair.first}, {"to", pair.second}, {"value", d.str()}});
    if (cert.area) j["area"] = cert.area->str();
    j["frame"] = {{"angle", to_double(cert.frame.angle)},
                  {"dx", to_double(cert.frame.dx)},
                  {"dy", to_double(cert.frame.dy)}};
    j["gap"] = to_double(gap.value);
    j["budget_exhausted"] = budget_exhausted;
    return j;
}

RationalCertificate certificate_from_json(const Json& j, Real* gap_out, bool* budget_out) {
    RationalCertificate cert;
    for (const auto& p : j.at("points"))
        cert.points.push_back({p.at("label").get<std::string>(),
                               BigRat::parse_decimal(p.at("x").get<std::string>()),
                               BigRat::parse_decimal(p.at("y").get<std::string>())});
    for (const auto& d : j.at("distances")) {
        auto key = normalized_pair(d.at("from").get<std::string>(), d.at("to").get<std::string>());
        cert.distances[key] = BigRat::parse_decimal(d.at("value").get<std::string>());
    }
    if (j.contains("area") && !j["area"].is_null())
        cert.area = BigRat::parse_decimal(j["area"].get<std::string>());
    if (j.contains("frame")) {
        cert.frame.angle = Real(j["frame"].value("angle", 0.0));
        cert.frame.dx = Real(j["frame"].value("dx", 0.0));
        cert.frame.dy = Real(j["frame"].value("dy", 0.0));
    }
    if (gap_out && j.contains("gap")) *gap_out = Real(j["gap"].get<double>());
    if (budget_out) *budget_out = j.value("budget_exhausted", false);
    return cert;
}

}  // namespace ratgeom
