#include <doctest.h>

#include <random>

#include "ratgeom/angle.hpp"

using namespace ratgeom;

TEST_CASE("angle_from_tangent_half spec examples") {
    RationalAngle a0 = angle_from_tangent_half(BigRat(0));
    CHECK(a0.cos == BigRat(1));
    CHECK(a0.sin == BigRat(0));

    RationalAngle ah = angle_from_tangent_half(BigRat(1, 2));
    CHECK(ah.cos == BigRat(3, 5));
    CHECK(ah.sin == BigRat(4, 5));

    RationalAngle a1 = angle_from_tangent_half(BigRat(1));
    CHECK(a1.cos == BigRat(0));
    CHECK(a1.sin == BigRat(1));
}

TEST_CASE("pythagorean identity holds exactly for random t") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-500, 500), den(1, 200);
    for (int i = 0; i < 400; ++i) {
        RationalAngle a = angle_from_tangent_half(BigRat(num(rng), den(rng)));
        CHECK(a.cos * a.cos + a.sin * a.sin == BigRat(1));
    }
}

TEST_CASE("C_Q closes under composition") {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> num(-100, 100), den(1, 50);
    for (int i = 0; i < 200; ++i) {
        RationalAngle a = angle_from_tangent_half(BigRat(num(rng), den(rng)));
        RationalAngle b = angle_from_tangent_half(BigRat(num(rng), den(rng)));
        RationalAngle c = a.compose(b);
        CHECK(c.cos * c.cos + c.sin * c.sin == BigRat(1));  // valid C_Q member
        // composing with the inverse returns to the identity
        RationalAngle id = c.compose(c.negated());
        CHECK(id.cos == BigRat(1));
        CHECK(id.sin == BigRat(0));
    }
}

TEST_CASE("RationalAngle validates the circle equation") {
    CHECK_THROWS(RationalAngle(BigRat(1, 2), BigRat(1, 2)));
    CHECK_NOTHROW(RationalAngle(BigRat(3, 5), BigRat(-4, 5)));
}

TEST_CASE("rational_angle_near axis and 3-4-5 targets") {
    // theta = pi/2: (0, 1) is an exact member
    RationalAngle a = rational_angle_near(real_pi() / 2, Real("1e-12"));
    CHECK(a.cos == BigRat(0));
    CHECK(a.sin == BigRat(1));

    // theta = atan(4/3): (3/5, 4/5) is acceptable, checked with the
    // high-precision atan2 oracle
    Real theta = atan2(Real(4), Real(3));
    RationalAngle b = rational_angle_near(theta, Real("1e-6"));
    CHECK(abs(b.radians() - theta) < Real("1e-6"));
    CHECK(b.cos * b.cos + b.sin * b.sin == BigRat(1));

    RationalAngle z = rational_angle_near(Real(0), Real("1e-9"));
    CHECK(z.cos == BigRat(1));
    CHECK(z.sin == BigRat(0));
}

TEST_CASE("rational_angle_near hits arbitrary targets within delta") {
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> ts(-3.14, 3.14);
    const Real delta("1e-3");
    for (int i = 0; i < 120; ++i) {
        Real theta(ts(rng));
        RationalAngle a = rational_angle_near(theta, delta);
        CHECK(abs(wrap_angle(a.radians() - theta)) < delta);  // atan2 oracle
        CHECK(a.cos * a.cos + a.sin * a.sin == BigRat(1));
    }
}

TEST_CASE("rational_angle_near_if respects the predicate") {
    // require nonzero sine and cosine even at an axis target
    auto pred = [](const RationalAngle& a) { return !a.cos.is_zero() && !a.sin.is_zero(); };
    RationalAngle a = rational_angle_near_if(real_pi() / 2, Real("1e-4"), pred);
    CHECK(!a.cos.is_zero());
    CHECK(!a.sin.is_zero());
    CHECK(abs(a.radians() - real_pi() / 2) < Real("1e-4"));
}

TEST_CASE("tan and cot") {
    RationalAngle a(BigRat(3, 5), BigRat(4, 5));
    CHECK(a.tan() == BigRat(4, 3));
    CHECK(a.cot() == BigRat(3, 4));
    RationalAngle up(BigRat(0), BigRat(1));
    CHECK_THROWS(up.tan());
}
