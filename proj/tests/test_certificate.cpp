#include <doctest.h>

#include "ratgeom/certificate.hpp"

using namespace ratgeom;

namespace {

RationalCertificate triangle345() {
    RationalCertificate cert;
    cert.points = {{"A", BigRat(0), BigRat(0)}, {"B", BigRat(3), BigRat(0)},
                   {"C", BigRat(0), BigRat(4)}};
    cert.distances[normalized_pair("A", "B")] = BigRat(3);
    cert.distances[normalized_pair("A", "C")] = BigRat(4);
    cert.distances[normalized_pair("B", "C")] = BigRat(5);
    cert.area = BigRat(6);
    return cert;
}

}  // namespace

TEST_CASE("3-4-5 certificate verifies") {
    CHECK(certificate_verify(triangle345()).ok);
}

TEST_CASE("tampered area fails") {
    RationalCertificate cert = triangle345();
    cert.area = BigRat(7);
    VerifyResult v = certificate_verify(cert);
    CHECK(!v.ok);
    CHECK(!v.reasons.empty());
}

TEST_CASE("tampered distance fails") {
    RationalCertificate cert = triangle345();
    cert.distances[normalized_pair("B", "C")] = BigRat(6);
    CHECK(!certificate_verify(cert).ok);
}

TEST_CASE("degenerate collinear 3-set verifies") {
    RationalCertificate cert;
    cert.points = {{"A", BigRat(0), BigRat(0)}, {"B", BigRat(1), BigRat(0)},
                   {"C", BigRat(2), BigRat(0)}};
    cert.distances[normalized_pair("A", "B")] = BigRat(1);
    cert.distances[normalized_pair("B", "C")] = BigRat(1);
    cert.distances[normalized_pair("A", "C")] = BigRat(2);
    cert.area = BigRat(0);
    CHECK(certificate_verify(cert).ok);
}

TEST_CASE("missing pair and duplicate label are caught") {
    RationalCertificate cert = triangle345();
    cert.distances.erase(normalized_pair("A", "B"));
    CHECK(!certificate_verify(cert).ok);

    RationalCertificate dup = triangle345();
    dup.points[1].label = "A";
    CHECK(!certificate_verify(dup).ok);
}

TEST_CASE("negative distance is rejected") {
    RationalCertificate cert = triangle345();
    cert.distances[normalized_pair("A", "B")] = BigRat(-3);
    CHECK(!certificate_verify(cert).ok);
}

TEST_CASE("json round trip preserves the exact payload") {
    RationalCertificate cert = triangle345();
    cert.frame = {Real("0.5"), Real(1), Real(2)};
    Json j = certificate_to_json(cert, {Real("0.01")}, false);
    Real gap;
    bool flagged = true;
    RationalCertificate back = certificate_from_json(j, &gap, &flagged);
    CHECK(back.points.size() == 3);
    CHECK(back.points[2].y == BigRat(4));
    CHECK(back.distances.at(normalized_pair("B", "C")) == BigRat(5));
    CHECK(back.area == BigRat(6));
    CHECK(!flagged);
    CHECK(certificate_verify(back).ok);
    CHECK(abs(gap - Real("0.01")) < Real("1e-12"));
}

TEST_CASE("shoelace area of a square cycle") {
    std::vector<LabeledPoint> sq = {{"A", BigRat(0), BigRat(0)},
                                    {"B", BigRat(2), BigRat(0)},
                                    {"C", BigRat(2), BigRat(2)},
                                    {"D", BigRat(0), BigRat(2)}};
    CHECK(shoelace_area(sq) == BigRat(4));
}
