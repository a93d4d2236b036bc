#include <doctest.h>

#include <random>

#include "ratgeom/errors.hpp"
#include "ratgeom/plane_geometry.hpp"

using namespace ratgeom;

namespace {

PointSet pts(std::initializer_list<std::pair<const char*, const char*>> coords) {
    PointSet out;
    char label = 'A';
    for (const auto& [x, y] : coords) out.push_back(make_input_point(std::string(1, label++), x, y));
    return out;
}

Real frame_err(const ApproxResult& res, const PointSet& input) {
    Real worst(0);
    Real c = cos(res.cert.frame.angle), s = sin(res.cert.frame.angle);
    for (const auto& p : res.cert.points)
        for (const auto& q : input)
            if (p.label == q.label) {
                Real X = to_real(p.x), Y = to_real(p.y);
                Real ux = c * X - s * Y + res.cert.frame.dx - q.x;
                Real uy = s * X + c * Y + res.cert.frame.dy - q.y;
                worst = std::max(worst, sqrt(ux * ux + uy * uy));
            }
    return worst;
}

void check_heron(const RationalCertificate& cert) {
    REQUIRE(cert.points.size() == 3);
    std::vector<BigRat> s;
    for (const auto& [k, v] : cert.distances) s.push_back(v);
    BigRat a2 = s[0] * s[0], b2 = s[1] * s[1], c2 = s[2] * s[2];
    BigRat heron = BigRat(2) * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2;
    REQUIRE(cert.area.has_value());
    CHECK(BigRat(16) * *cert.area * *cert.area == heron);
}

}  // namespace

TEST_CASE("triangle: already-rational input short-circuits") {
    auto res = approx_triangle(pts({{"0", "0"}, {"3", "0"}, {"0", "4"}}), Real("0.5"));
    CHECK(res.gap.value == 0);
    CHECK(!res.budget_exhausted);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.at(normalized_pair("A", "B")) == BigRat(3));
    CHECK(res.cert.distances.at(normalized_pair("A", "C")) == BigRat(4));
    CHECK(res.cert.distances.at(normalized_pair("B", "C")) == BigRat(5));
    CHECK(res.cert.area == BigRat(6));
}

TEST_CASE("triangle: generic input within eps, vertex preserved, base parallel") {
    PointSet input = pts({{"0", "0"}, {"4", "0"}, {"1", "2"}});
    Real eps("0.05");
    auto res = approx_triangle(input, eps);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.gap.value < eps);
    CHECK(frame_err(res, input) < eps);
    check_heron(res.cert);

    // The largest side here is BC (from (4,0) to (1,2))? Exact squared
    // lengths: AB = 16, AC = 5, BC = 13, so A = vertex "C"... the largest
    // side is AB = 16, opposite vertex C(1,2) which must be preserved:
    // its canonical image maps exactly onto the input.
    Real c = cos(res.cert.frame.angle), s = sin(res.cert.frame.angle);
    for (const auto& p : res.cert.points)
        if (p.label == "C") {
            Real X = to_real(p.x), Y = to_real(p.y);
            CHECK(abs(c * X - s * Y + res.cert.frame.dx - Real(1)) < Real("1e-40"));
            CHECK(abs(s * X + c * Y + res.cert.frame.dy - Real(2)) < Real("1e-40"));
        }
    // base parallel: the two base vertices share y = 0 in canonical frame
    int base_count = 0;
    for (const auto& p : res.cert.points)
        if (p.y.is_zero()) ++base_count;
    CHECK(base_count == 2);
}

TEST_CASE("triangle: collinear input yields a rational collinear set") {
    PointSet input = pts({{"0.3", "0.3"}, {"1.1", "1.1"}, {"2.7", "2.7"}});
    auto res = approx_triangle(input, Real("0.01"));
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.area == BigRat(0));
    CHECK(res.gap.value < Real("0.01"));
    CHECK(frame_err(res, input) < Real("0.01"));
}

TEST_CASE("triangle: random inputs") {
    std::mt19937 rng(3131);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    Real eps("0.05");
    int done = 0;
    while (done < 25) {
        char buf[64];
        PointSet input;
        char label = 'A';
        for (int i = 0; i < 3; ++i) {
            std::snprintf(buf, sizeof buf, "%.6f", coord(rng));
            std::string x = buf;
            std::snprintf(buf, sizeof buf, "%.6f", coord(rng));
            input.push_back(make_input_point(std::string(1, label++), x, buf));
        }
        // skip degenerate slivers
        auto cr = (input[1].xq - input[0].xq) * (input[2].yq - input[0].yq) -
                  (input[2].xq - input[0].xq) * (input[1].yq - input[0].yq);
        if (abs(cr) < BigRat(1, 100)) continue;
        auto res = approx_triangle(input, eps);
        CHECK(certificate_verify(res.cert).ok);
        CHECK(res.gap.value < eps);
        CHECK(frame_err(res, input) < eps);
        check_heron(res.cert);
        ++done;
    }
}

TEST_CASE("parallelogram: rational rectangle returns itself") {
    PointSet input = pts({{"0", "0"}, {"3", "0"}, {"3", "4"}, {"0", "4"}});
    auto res = approx_parallelogram(input, Real("0.1"));
    CHECK(res.gap.value == 0);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.points[0].x == BigRat(0));
    CHECK(res.cert.distances.at(normalized_pair("A", "C")) == BigRat(5));
}

TEST_CASE("parallelogram: unit square within 0.1") {
    PointSet input = pts({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    auto res = approx_parallelogram(input, Real("0.1"));
    CHECK(!res.budget_exhausted);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.gap.value < Real("0.1"));
    CHECK(frame_err(res, input) < Real("0.1"));
    // both diagonals rational and equal is not required, but all six
    // distances must be present
    CHECK(res.cert.distances.size() == 6);
    REQUIRE(res.cert.area.has_value());
    CHECK(!res.cert.area->is_zero());
}

TEST_CASE("parallelogram: area equals twice the diagonal triangle") {
    PointSet input = pts({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    auto res = approx_parallelogram(input, Real("0.1"));
    // half-parallelogram over the long diagonal: shoelace of three of the
    // four points in cycle order
    std::vector<LabeledPoint> tri = {res.cert.points[0], res.cert.points[1], res.cert.points[2]};
    CHECK(*res.cert.area == BigRat(2) * shoelace_area(tri));
}

TEST_CASE("parallelogram: skewed input (coupled pair search)") {
    // diagonals 2e = 3, 2f = 1.8, angle ~ 67 degrees: a genuine non-rectangle
    PointSet input = pts({{"-1.5", "0"}, {"-0.351", "-0.829"}, {"1.5", "0"}, {"0.351", "0.829"}});
    auto res = approx_parallelogram(input, Real("0.25"), SearchBudget{120, 30.0});
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.size() == 6);
    // flagged results are acceptable; when unflagged the gap met eps
    if (!res.budget_exhausted) CHECK(res.gap.value < Real("0.25"));
}

TEST_CASE("parallelogram: rejects non-parallelogram input") {
    PointSet input = pts({{"0", "0"}, {"1", "0"}, {"2", "1"}, {"0", "1"}});
    CHECK_THROWS_AS(approx_parallelogram(input, Real("0.1")), NotAParallelogram);
}

TEST_CASE("quadrilateral: already-rational 4-set returns itself") {
    PointSet input = pts({{"0", "0"}, {"3", "0"}, {"3", "4"}, {"0", "4"}});
    auto res = approx_quadrilateral(input, Real("0.1"));
    CHECK(res.gap.value == 0);
    CHECK(!res.budget_exhausted);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.size() == 6);
}

TEST_CASE("quadrilateral: unit square") {
    PointSet input = pts({{"0", "0"}, {"1", "0"}, {"1", "1"}, {"0", "1"}});
    auto res = approx_quadrilateral(input, Real("0.1"));
    CHECK(!res.budget_exhausted);
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.size() == 6);
    CHECK(res.gap.value < Real("0.1"));
    CHECK(frame_err(res, input) < Real("0.1"));
}

TEST_CASE("quadrilateral: concave kite") {
    PointSet input = pts({{"0", "0"}, {"4", "0"}, {"2", "1"}, {"2", "4"}});
    auto res = approx_quadrilateral(input, Real("0.2"), SearchBudget{120, 45.0});
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.size() == 6);
    if (!res.budget_exhausted) {
        CHECK(res.gap.value < Real("0.2"));
        CHECK(frame_err(res, input) < Real("0.2"));
    }
}

TEST_CASE("quadrilateral: three collinear points") {
    PointSet input = pts({{"0", "0"}, {"1.3", "0"}, {"3.7", "0"}, {"1.9", "2.2"}});
    // cycle order A, B, C collinear with D off the line; reorder to a
    // simple cycle happens internally
    auto res = approx_quadrilateral(input, Real("0.05"));
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.distances.size() == 6);
    CHECK(res.gap.value < Real("0.05"));
    CHECK(frame_err(res, input) < Real("0.05"));
}

TEST_CASE("quadrilateral: four collinear points") {
    PointSet input = pts({{"0.1", "0.1"}, {"1.2", "1.2"}, {"2.6", "2.6"}, {"3.9", "3.9"}});
    auto res = approx_quadrilateral(input, Real("0.02"));
    CHECK(certificate_verify(res.cert).ok);
    CHECK(res.cert.area == BigRat(0));
    CHECK(res.gap.value < Real("0.02"));
}

TEST_CASE("quadrilateral: random convex inputs mostly succeed") {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> ang(0, 2 * 3.14159265358979);
    std::uniform_real_distribution<double> rad(2.0, 4.0);
    int produced = 0, ok = 0;
    while (produced < 4) {
        double a[4];
        for (double& v : a) v = ang(rng);
        std::sort(a, a + 4);
        bool spread = true;
        for (int i = 0; i < 3; ++i)
            if (a[i + 1] - a[i] < 0.4) spread = false;
        if (!spread) continue;
        PointSet input;
        char label = 'A';
        for (int i = 0; i < 4; ++i) {
            double r = rad(rng);
            char bx[64], by[64];
            std::snprintf(bx, sizeof bx, "%.4f", r * std::cos(a[i]));
            std::snprintf(by, sizeof by, "%.4f", r * std::sin(a[i]));
            input.push_back(make_input_point(std::string(1, label++), bx, by));
        }
        ++produced;
        auto res = approx_quadrilateral(input, Real("0.1"), SearchBudget{120, 30.0});
        CHECK(certificate_verify(res.cert).ok);
        CHECK(res.cert.distances.size() == 6);
        if (!res.budget_exhausted) {
            ++ok;
            CHECK(res.gap.value < Real("0.1"));
        }
    }
    CHECK(ok >= 2);  // the stream search lands within budget for most inputs
}

TEST_CASE("approx validates inputs") {
    CHECK_THROWS(approx_triangle(pts({{"0", "0"}, {"1", "0"}}), Real("0.1")));
    CHECK_THROWS(approx_triangle(pts({{"0", "0"}, {"1", "0"}, {"1", "0"}}), Real("0.1")));
    CHECK_THROWS(approx_triangle(pts({{"0", "0"}, {"1", "0"}, {"0", "1"}}), Real(0)));
}
