#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oblate/numeric.hpp"

using namespace oblate;

namespace {
double rel_err(dd got, double hi_ref, double lo_ref) {
    dd ref{hi_ref, lo_ref};
    dd d = fabs(got - ref);
    dd m = fabs(ref);
    if (to_double(m) == 0.0) return to_double(d);
    return to_double(d / m);
}
} // namespace

TEST_CASE("dd basic arithmetic is exact beyond double") {
    dd a(1.0);
    dd b = a / dd(3.0);
    dd c = b * dd(3.0);
    REQUIRE(std::fabs(to_double(c - dd(1.0))) < 1e-30);

    // (1e16 + 1) - 1e16 == 1 exactly in dd, not in double
    dd big(1e16);
    dd s = big + dd(1.0);
    REQUIRE(to_double(s - big) == 1.0);
}

TEST_CASE("dd sqrt and elementary functions match references") {
    // reference values computed with mpmath at 40 digits
    REQUIRE(rel_err(sqrt(dd(2.0)), 1.4142135623730951, -9.667293313452913e-17) < 1e-30);
    REQUIRE(rel_err(exp(dd(1.0)), 2.718281828459045, 1.4456468917292502e-16) < 1e-29);
    REQUIRE(rel_err(log(dd(10.0)), 2.302585092994046, -2.1707562233822494e-16) < 1e-29);
    REQUIRE(rel_err(sin(dd(1.0)), 0.8414709848078965, 1.7768450929355361e-18) < 1e-29);
    REQUIRE(rel_err(cos(dd(1.0)), 0.54030230586813977, -4.7609546126044172e-17) < 1e-29);
}

TEST_CASE("dd exp/log round trip") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    for (int i = 0; i < 50; ++i) {
        dd x(dist(rng));
        dd y = log(exp(x));
        REQUIRE(std::fabs(to_double(y - x)) < 1e-28 * (1.0 + std::fabs(x.hi)));
    }
}

TEST_CASE("dd trig identities") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> dist(-50.0, 50.0);
    for (int i = 0; i < 50; ++i) {
        dd x(dist(rng));
        dd s, c;
        sincos(x, s, c);
        REQUIRE(std::fabs(to_double(s * s + c * c - dd(1.0))) < 1e-29);
    }
    // atan2 inverts sin/cos
    for (int i = 0; i < 20; ++i) {
        double ang = -3.0 + 0.3 * i;
        dd s, c;
        sincos(dd(ang), s, c);
        dd back = atan2(s, c);
        double expect = std::remainder(ang, 2.0 * M_PI);
        REQUIRE(std::fabs(to_double(back) - expect) < 1e-28);
    }
}

TEST_CASE("dd pow10i exact powers") {
    REQUIRE(to_double(pow10i(0)) == 1.0);
    REQUIRE(to_double(pow10i(3)) == 1000.0);
    REQUIRE(std::fabs(to_double(pow10i(31) / dd(1e31)) - 1.0) < 1e-15);
    REQUIRE(std::fabs(to_double(pow10i(-5)) - 1e-5) < 1e-20);
    dd p = pow10i(40) * pow10i(-40);
    REQUIRE(std::fabs(to_double(p) - 1.0) < 1e-30);
}

TEST_CASE("complex dd operations") {
    cx<dd> z{dd(3.0), dd(4.0)};
    REQUIRE(std::fabs(to_double(abs(z)) - 5.0) < 1e-30);
    cx<dd> w = sqrt(z * z);
    REQUIRE(std::fabs(to_double(w.re) - 3.0) < 1e-29);
    REQUIRE(std::fabs(to_double(w.im) - 4.0) < 1e-29);

    // log(exp(z)) == z for moderate z
    cx<dd> z2{dd(0.5), dd(1.25)};
    cx<dd> r = log(exp(z2));
    REQUIRE(std::fabs(to_double(r.re - z2.re)) < 1e-29);
    REQUIRE(std::fabs(to_double(r.im - z2.im)) < 1e-29);
}

TEST_CASE("complex double matches std where it counts") {
    cxd z{1.5, -2.5};
    cxd s = sin(z);
    // sin(1.5 - 2.5i) via mpmath
    REQUIRE(s.re == Catch::Approx(6.1169280123693124).epsilon(1e-14));
    REQUIRE(s.im == Catch::Approx(-0.42797453450615125).epsilon(1e-14));
}
