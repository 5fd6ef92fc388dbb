// File: test_quad.cpp
// Forms, surds, periodic continued fractions and the T/V correspondence.
// Fixed points are verified against the quadratic equation they must
// satisfy, not against precomputed data.

#include <doctest.h>

#include <random>

#include "modknot/quad.hpp"

using namespace modknot;

namespace {

// True iff x = (P + √D)/Q satisfies A x² + B x + C = 0, checked exactly:
// rational part A(P²+D) + BPQ + CQ² = 0 and irrational part 2AP + BQ = 0.
bool satisfies(const QuadraticSurd& x, const Int& A, const Int& B, const Int& C) {
    return A * (x.P * x.P + x.D) + B * x.P * x.Q + C * x.Q * x.Q == 0 &&
           2 * A * x.P + B * x.Q == 0;
}

} // namespace

TEST_CASE("make_surd canonicalizes and validates") {
    // (3 + 2√6)/5 = (3 + √24)/5 is already canonical.
    CHECK(make_surd(3, 24, 5) == QuadraticSurd{3, 24, 5});
    // (6 + √96)/10 = (3 + √24)/5.
    CHECK(make_surd(6, 96, 10) == QuadraticSurd{3, 24, 5});
    CHECK(make_surd(6, 96, 10).str() == "(3 + sqrt(24))/5");
    CHECK_THROWS_AS(make_surd(1, 16, 2), NotIndefinite); // square D
    CHECK_THROWS_AS(make_surd(1, -3, 2), NotIndefinite);
    CHECK_THROWS_AS(make_surd(1, 24, 0), PrecondViolated);
}

TEST_CASE("principal root of the running example form") {
    const QuadraticForm f{152, -600, -237};
    CHECK(f.str() == "152x^2 - 600xy - 237y^2");
    CHECK(discriminant(f) == 504096);
    const QuadraticSurd root = principal_root(f);
    CHECK(root == QuadraticSurd{150, 31506, 76});
    CHECK(root.str() == "(150 + sqrt(31506))/76");
    CHECK_THROWS_AS(principal_root(QuadraticForm{1, 0, 1}), NotIndefinite);
    CHECK_THROWS_AS(principal_root(QuadraticForm{1, 3, 2}), NotIndefinite); // square disc
}

TEST_CASE("cf_expand pinned expansions") {
    // (3 + 2√6)/5 is purely periodic with period 1,1,1,2.
    const PeriodicCF golden = cf_expand(make_surd(3, 24, 5));
    CHECK(golden.preperiod.empty());
    CHECK(golden.period == std::vector<Int>{1, 1, 1, 2});

    // √31 = [5; 1,1,3,5,3,1,1,10]: naturally even period, preperiod kept.
    const PeriodicCF r31 = cf_expand(make_surd(0, 31, 1));
    CHECK(r31.preperiod == std::vector<Int>{5});
    CHECK(r31.period == std::vector<Int>{1, 1, 3, 5, 3, 1, 1, 10});
    CHECK(r31.str() == "[5; 1, 1, 3, 5, 3, 1, 1, 10]");

    // √7 = [2; 1,1,1,4].
    const PeriodicCF r7 = cf_expand(make_surd(0, 7, 1));
    CHECK(r7.preperiod == std::vector<Int>{2});
    CHECK(r7.period == std::vector<Int>{1, 1, 1, 4});

    // √3 = [1; overline{1,2}]: minimal period already even.
    const PeriodicCF r3 = cf_expand(make_surd(0, 3, 1));
    CHECK(r3.preperiod == std::vector<Int>{1});
    CHECK(r3.period == std::vector<Int>{1, 2});

    // √2 = [1; overline{2}]: odd minimal period doubles, and the odd
    // preperiod absorbs one entry: [1, 2; 2, 2].
    const PeriodicCF r2 = cf_expand(make_surd(0, 2, 1));
    CHECK(r2.period.size() % 2 == 0);
    CHECK(r2.preperiod.size() % 2 == 0);
    CHECK(r2.period == std::vector<Int>{2, 2});
    CHECK(r2.preperiod == std::vector<Int>{1, 2});

    // The running example: expansion of (150 + √31506)/76 has period
    // 4,3,4,3,1,2 (the word L⁴R³L⁴R³LR²).
    const PeriodicCF run = cf_expand(QuadraticSurd{150, 31506, 76});
    CHECK(run.period == std::vector<Int>{4, 3, 4, 3, 1, 2});
}

TEST_CASE("tv_product") {
    const Sl2Matrix g = tv_product({1, 1, 1, 2});
    CHECK(g == Sl2Matrix{8, 3, 5, 2});
    // Determinant 1 on random even sequences.
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> entry(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> period;
        const int len = 2 * (1 + trial % 4);
        for (int i = 0; i < len; ++i) period.emplace_back(entry(rng));
        const Sl2Matrix m = tv_product(period);
        CHECK(m.a * m.d - m.b * m.c == 1);
    }
}

TEST_CASE("surd_from_period is the attracting fixed point") {
    // Pinned: period (1,1,1,2) has fixed point (3 + √24)/5 = (3 + 2√6)/5.
    CHECK(surd_from_period({1, 1, 1, 2}) == QuadraticSurd{3, 24, 5});

    std::mt19937 rng(40);
    std::uniform_int_distribution<long> entry(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> period;
        const int len = 2 * (1 + trial % 3);
        for (int i = 0; i < len; ++i) period.emplace_back(entry(rng));
        const Sl2Matrix g = tv_product(period);
        const QuadraticSurd w = surd_from_period(period);
        // w = (aw + b)/(cw + d)  ⇔  c w² + (d − a) w − b = 0.
        CHECK(satisfies(w, g.c, g.d - g.a, -g.b));
        // Attracting root: the larger of the two, so w > (a−d)/(2c) exactly
        // when the √D contribution is positive — guaranteed by P = a−d,
        // Q = 2c > 0 before canonicalization. Re-expansion closes the loop:
        const PeriodicCF cf = cf_expand(w);
        CHECK(cf.preperiod.empty());
        // The expansion recovers the period up to taking the minimal one.
        CHECK(period.size() % cf.period.size() == 0);
        for (std::size_t i = 0; i < period.size(); ++i)
            CHECK(period[i] == cf.period[i % cf.period.size()]);
    }
    CHECK_THROWS_AS(surd_from_period({1, 2, 3}), OddPeriod);
    CHECK_THROWS_AS(surd_from_period({}), OddPeriod);
}

TEST_CASE("form_from_period round-trips through the principal root") {
    CHECK(form_from_period({4, 3, 4, 3, 1, 2}) == QuadraticForm{152, -600, -237});
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> entry(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> period;
        const int len = 2 * (1 + trial % 3);
        for (int i = 0; i < len; ++i) period.emplace_back(entry(rng));
        const QuadraticForm f = form_from_period(period);
        // The principal root of the recovered form is the period's fixed point.
        CHECK(principal_root(f) == surd_from_period(period));
    }
}
