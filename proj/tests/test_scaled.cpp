#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oblate/context.hpp"
#include "oblate/scaled.hpp"

using namespace oblate;

TEST_CASE("scaled_from normalizes decimal representations") {
    auto a = scaled_from(cxd{123.4, 0.0});
    REQUIRE(a.char_re == Catch::Approx(1.234).epsilon(1e-14));
    REQUIRE(a.char_im == 0.0);
    REQUIRE(a.exp10 == 2);

    auto z = scaled_from(cxd{0.0, 0.0});
    REQUIRE(z.char_re == 0.0);
    REQUIRE(z.char_im == 0.0);
    REQUIRE(z.exp10 == 0);

    auto b = scaled_from(cxd{0.0, 0.05});
    REQUIRE(b.char_re == 0.0);
    REQUIRE(b.char_im == Catch::Approx(5.0).epsilon(1e-14));
    REQUIRE(b.exp10 == -2);

    REQUIRE_THROWS_AS(scaled_from(cxd{1.0 / 0.0, 0.0}), std::domain_error);
}

TEST_CASE("scaled_mul identities and exponent handling") {
    auto one = scaled_from(cxd{1.0, 0.0});
    auto x = scaled_from(cxd{-3.7, 0.2});
    auto p = scaled_mul(one, x);
    REQUIRE(p.char_re == Catch::Approx(x.char_re));
    REQUIRE(p.char_im == Catch::Approx(x.char_im));
    REQUIRE(p.exp10 == x.exp10);

    scaled_cxd a{2.0, 0.0, 5}, b{3.0, 0.0, -5};
    auto q = scaled_mul(a, b);
    REQUIRE(q.char_re == Catch::Approx(6.0));
    REQUIRE(q.exp10 == 0);

    // would overflow native doubles; exact in scaled form
    scaled_cxd big{5.0, 0.0, 300};
    auto r = scaled_mul(big, big);
    REQUIRE(r.char_re == Catch::Approx(2.5));
    REQUIRE(r.exp10 == 601);
}

TEST_CASE("scaled_mul associative to ~1 ulp on random triples") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    std::uniform_int_distribution<long long> e(-100, 100);
    for (int i = 0; i < 200; ++i) {
        scaled_cxd a = scaled_from(cxd{d(rng), d(rng)});
        scaled_cxd b = scaled_from(cxd{d(rng), d(rng)});
        scaled_cxd c = scaled_from(cxd{d(rng), d(rng)});
        a.exp10 += e(rng); b.exp10 += e(rng); c.exp10 += e(rng);
        auto lhs = scaled_mul(scaled_mul(a, b), c);
        auto rhs = scaled_mul(a, scaled_mul(b, c));
        REQUIRE(lhs.exp10 == rhs.exp10);
        cxd dl = lhs.characteristic() - rhs.characteristic();
        REQUIRE(abs(dl) < 1e-14 * abs(lhs.characteristic()));
    }
}

TEST_CASE("scaled round trip to complex within native range") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int i = 0; i < 100; ++i) {
        cxd v{d(rng), d(rng)};
        if (abs(v) == 0.0) continue;
        cxd back = to_cx(scaled_from(v));
        REQUIRE(abs(back - v) < 1e-14 * abs(v));
    }
}

TEST_CASE("scaled add/sub/div") {
    auto a = scaled_from(cxd{1.0, 0.0});
    auto b = scaled_from(cxd{-1.0, 0.0});
    auto s = scaled_add(a, b);
    REQUIRE(s.is_zero());

    scaled_cxd x{1.5, 0.5, 10}, y{2.0, -1.0, 8};
    auto q = scaled_div(scaled_mul(x, y), y);
    REQUIRE(q.exp10 == x.exp10);
    REQUIRE(q.char_re == Catch::Approx(x.char_re).epsilon(1e-13));
    REQUIRE(q.char_im == Catch::Approx(x.char_im).margin(1e-13));

    // widely separated exponents: big value wins
    scaled_cxd big{1.0, 0.0, 100}, small{9.0, 0.0, 0};
    auto t = scaled_add(big, small);
    REQUIRE(t.exp10 == 100);
    REQUIRE(t.char_re == Catch::Approx(1.0));
}

TEST_CASE("sum_with_error follows the positive/negative sum rule") {
    int ndec = 15;
    {
        std::vector<cxd> terms{{1.0, 0.0}, {-1.0 + 1e-8, 0.0}};
        auto [s, e] = sum_with_error(terms, ndec);
        REQUIRE(s.re == Catch::Approx(1e-8).epsilon(1e-6));
        REQUIRE(e.digits_lost == Catch::Approx(8.0).margin(0.01));
    }
    {
        std::vector<cxd> terms{{1.0, 0.0}, {2.0, 0.0}, {3.0, 0.0}};
        auto [s, e] = sum_with_error(terms, ndec);
        REQUIRE(s.re == 6.0);
        REQUIRE(e.digits_lost == 0.0);
    }
    {
        std::vector<cxd> terms{{1000.0, 0.0}, {-999.0, 0.0}};
        auto [s, e] = sum_with_error(terms, ndec);
        REQUIRE(s.re == 1.0);
        REQUIRE(e.digits_lost == Catch::Approx(3.0).margin(1e-6));
    }
    {
        // exact cancellation of nonzero terms: total loss
        std::vector<cxd> terms{{4.0, 0.0}, {-4.0, 0.0}};
        auto [s, e] = sum_with_error(terms, ndec);
        REQUIRE(s.re == 0.0);
        REQUIRE(e.digits_lost == static_cast<double>(ndec));
    }
}

TEST_CASE("sum_with_error is zero when terms share a half-plane per component") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> d(0.0, 3.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<cxd> terms;
        for (int i = 0; i < 12; ++i) terms.push_back({d(rng), -d(rng)});
        auto [s, e] = sum_with_error(terms, 15);
        (void)s;
        REQUIRE(e.digits_lost == 0.0);
    }
}

TEST_CASE("scaled_cancel_sum handles huge ranges") {
    scaled_cancel_sum<double> acc;
    acc.add(scaled_cxd{1.0, 0.0, 200});
    acc.add(scaled_cxd{-1.0, 0.0, 200});
    acc.add(scaled_cxd{3.0, 0.0, 180});
    auto s = acc.sum();
    REQUIRE(s.exp10 == 180);
    REQUIRE(s.char_re == Catch::Approx(3.0).epsilon(1e-10));
    REQUIRE(acc.error(15).digits_lost == Catch::Approx(15.0).margin(0.01));
}

TEST_CASE("precision context construction") {
    auto d = make_context(PrecisionMode::working);
    REQUIRE(d.ndec == 15);
    REQUIRE(d.minacc == 8);
    auto h = make_context(PrecisionMode::hybrid);
    REQUIRE(h.ndec_refine >= 25);
    auto x = make_context(PrecisionMode::extended, 25.0);
    REQUIRE(x.ndec == 31);
    REQUIRE(x.minacc == 8);
    auto x2 = make_context(PrecisionMode::extended, 5.0);
    REQUIRE(x2.minacc == 15);
    REQUIRE_THROWS(make_context(PrecisionMode::working, 0.0, 99));
}
