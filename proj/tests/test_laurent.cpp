// File: test_laurent.cpp
// Laurent polynomial arithmetic: canonical form, ring axioms on random
// inputs, exact division against the multiplication oracle.

#include <doctest.h>

#include <random>

#include "modknot/laurent.hpp"

using namespace modknot;

namespace {

LaurentPoly random_poly(std::mt19937& rng, bool allow_zero = true) {
    std::uniform_int_distribution<int> len(allow_zero ? 0 : 1, 6);
    std::uniform_int_distribution<long> exp(-5, 5);
    std::uniform_int_distribution<long> coef(-9, 9);
    LaurentPoly p;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) p = p + LaurentPoly::term(Int(coef(rng)), exp(rng));
    if (!allow_zero && p.is_zero()) p = LaurentPoly::one();
    return p;
}

} // namespace

TEST_CASE("canonical form trims zeros and normalizes the zero polynomial") {
    const LaurentPoly p = LaurentPoly::from_coeffs(-2, {Int(0), Int(3), Int(0), Int(1), Int(0)});
    CHECK(p.min_exp() == -1);
    CHECK(p.max_exp() == 1);
    CHECK(p.coeff(-1) == 3);
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(7) == 0);

    const LaurentPoly z = LaurentPoly::from_coeffs(4, {Int(0), Int(0)});
    CHECK(z.is_zero());
    CHECK(z == LaurentPoly());
    CHECK(z.min_exp() == 0);
}

TEST_CASE("string form") {
    const LaurentPoly p = LaurentPoly::term(Int(1), 3) - LaurentPoly::term(Int(2), 1)
                        + LaurentPoly::one();
    CHECK(p.str() == "t^3 - 2*t + 1");
    CHECK(LaurentPoly().str() == "0");
    CHECK(LaurentPoly::t_power(-2).str() == "t^-2");
}

TEST_CASE("arithmetic identities on random polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == LaurentPoly());
        CHECK(a * LaurentPoly::one() == a);
        CHECK((a * b).at_one() == a.at_one() * b.at_one());
        CHECK(a.inverted_variable().inverted_variable() == a);
        CHECK(a.shifted(3).shifted(-3) == a);
    }
}

TEST_CASE("lp_div_exact inverts multiplication and rejects inexact division") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const LaurentPoly a = random_poly(rng);
        const LaurentPoly b = random_poly(rng, /*allow_zero=*/false);
        CHECK(lp_div_exact(a * b, b) == a);
    }
    // t + 1 does not divide t^2 + 1.
    const LaurentPoly num = LaurentPoly::t_power(2) + LaurentPoly::one();
    const LaurentPoly den = LaurentPoly::t_power(1) + LaurentPoly::one();
    CHECK_THROWS_AS(lp_div_exact(num, den), NotDivisible);
    CHECK_THROWS_AS(lp_div_exact(num, LaurentPoly()), PrecondViolated);
}

TEST_CASE("q_cyclotomic_bracket") {
    CHECK(q_cyclotomic_bracket(1) == LaurentPoly::one());
    CHECK(q_cyclotomic_bracket(3).str() == "t^2 + t + 1");
    // (1 - t^n) = (1 - t) [n]_t
    for (long n = 1; n <= 12; ++n) {
        const LaurentPoly lhs = LaurentPoly::one() - LaurentPoly::t_power(n);
        const LaurentPoly rhs =
            (LaurentPoly::one() - LaurentPoly::t_power(1)) * q_cyclotomic_bracket(n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("lex ordering is a strict total order on samples") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const LaurentPoly a = random_poly(rng), b = random_poly(rng);
        if (a == b) {
            CHECK(!a.lex_less(b));
            CHECK(!b.lex_less(a));
        } else {
            CHECK(a.lex_less(b) != b.lex_less(a));
        }
    }
}
