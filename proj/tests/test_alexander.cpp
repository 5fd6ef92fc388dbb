// File: test_alexander.cpp
// Alexander polynomials: pinned worked examples, route agreement,
// normalization invariants, degree/genus formulas, family oracles.

#include <doctest.h>

#include <map>
#include <random>

#include "modknot/alexander.hpp"

using namespace modknot;

namespace {

Braid trefoil_b5() {
    Braid b;
    b.strands = 5;
    for (int j : {2, 1, 3, 2, 4, 3}) b.gens.emplace_back(j, +1);
    return b;
}

AlexanderPoly from_terms(const std::map<long, long>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p = p + LaurentPoly::term(Int(c), e);
    return AlexanderPoly{p.coeffs()};
}

// The degree-20 polynomial of the running example.
const AlexanderPoly kDeg20 = from_terms({
    {20, 1}, {19, -1}, {17, 1},  {16, -1}, {14, 1}, {13, -1}, {12, 1},
    {11, -1}, {10, 1}, {9, -1}, {8, 1}, {7, -1}, {6, 1}, {4, -1}, {3, 1},
    {1, -1}, {0, 1}});

// The degree-68 polynomial of the 𝕃(4,4;5,8) example.
const AlexanderPoly kDeg68 = from_terms({
    {68, 1}, {67, -1}, {60, 1}, {59, -1}, {56, 1}, {55, -1}, {52, 1},
    {51, -1}, {48, 1}, {46, -2}, {45, 1}, {44, 2}, {43, -2}, {40, 1},
    {38, -1}, {37, -1}, {36, 3}, {35, -1}, {34, -1}, {33, -1}, {32, 3},
    {31, -1}, {30, -1}, {28, 1}, {25, -2}, {24, 2}, {23, 1}, {22, -2},
    {20, 1}, {17, -1}, {16, 1}, {13, -1}, {12, 1}, {9, -1}, {8, 1},
    {1, -1}, {0, 1}});

LRWord random_knot_word(std::mt19937& rng, int max_len = 12) {
    std::uniform_int_distribution<int> len(3, max_len);
    std::uniform_int_distribution<int> bit(0, 1);
    for (;;) {
        const int n = len(rng);
        std::string s;
        for (int i = 0; i < n; ++i) s += bit(rng) ? 'R' : 'L';
        if (is_primitive(s) && s.find('L') != std::string::npos &&
            s.find('R') != std::string::npos)
            return lyndon_canonical(LRWord{s});
    }
}

} // namespace

TEST_CASE("trefoil from the 5-strand example braid") {
    const AlexanderPoly tref = alexander(trefoil_b5());
    CHECK(tref.coeffs == std::vector<Int>{1, -1, 1});
    CHECK(tref.str() == "t^2 - t + 1");
    CHECK(alexander_unreduced_check(trefoil_b5()) == tref);
    CHECK(genus(tref) == 1);
}

TEST_CASE("pinned bivariate characteristic polynomial of the trefoil braid") {
    const LaurentMatrix m = burau(trefoil_b5(), BurauVariant::full);
    const BivariatePoly charpoly = bivar_det(BivariateMatrix::char_matrix(m));
    // (s − 1)(s⁴ + t²s³ + t³s² + t⁴s + t⁶)
    BivariatePoly quartic = BivariatePoly::s_term(4, LaurentPoly::one());
    quartic = quartic + BivariatePoly::s_term(3, LaurentPoly::t_power(2));
    quartic = quartic + BivariatePoly::s_term(2, LaurentPoly::t_power(3));
    quartic = quartic + BivariatePoly::s_term(1, LaurentPoly::t_power(4));
    quartic = quartic + BivariatePoly(LaurentPoly::t_power(6));
    const BivariatePoly s_minus_one =
        BivariatePoly::s_term(1, LaurentPoly::one()) - BivariatePoly(LaurentPoly::one());
    CHECK(charpoly == s_minus_one * quartic);
}

TEST_CASE("degree-20 running example and its factorization") {
    CHECK(alexander_of_spec(parse_spec("2,4:1,2:3,1:2,2")) == kDeg20);
    CHECK(alexander_of_word(parse_word("LLLLRRRLLLLRRRLRR")) == kDeg20);
    // (t² − t + 1)(t¹⁸ − t¹⁶ + t¹² − t⁹ + t⁶ − t² + 1) re-multiplies to it.
    const LaurentPoly f1 = LaurentPoly::from_coeffs(0, {Int(1), Int(-1), Int(1)});
    LaurentPoly f2;
    for (const auto& [e, c] : std::map<long, long>{
             {18, 1}, {16, -1}, {12, 1}, {9, -1}, {6, 1}, {2, -1}, {0, 1}})
        f2 = f2 + LaurentPoly::term(Int(c), e);
    CHECK(f1 * f2 == kDeg20.poly());
    CHECK(genus(kDeg20) == 10);
}

TEST_CASE("degree-68 example") {
    CHECK(alexander_of_spec(parse_spec("4,4:5,8")) == kDeg68);
    CHECK(genus(kDeg68) == 34);
}

TEST_CASE("degree formula") {
    CHECK(alexander_degree_formula(parse_spec("2,4:1,2:3,1:2,2")) == 20);
    CHECK(alexander_degree_formula(parse_spec("2,3")) == 2);
    for (long n = 1; n <= 6; ++n)
        CHECK(alexander_degree_formula(make_spec({{n, 1}})) == 0);
}

TEST_CASE("genus rejects odd degree") {
    AlexanderPoly odd;
    odd.coeffs = {Int(1), Int(1)};
    CHECK_THROWS_AS(genus(odd), OddDegree);
    CHECK(genus(AlexanderPoly{{Int(1)}}) == 0);
}

TEST_CASE("symmetry of the raw quotient") {
    CHECK(symmetry_defect(trefoil_b5()));
    CHECK(symmetry_defect(modular_braid(parse_word("LLLLRRRLLLLRRRLRR"))));
    Braid sigma1_cubed;
    sigma1_cubed.strands = 2;
    for (int i = 0; i < 3; ++i) sigma1_cubed.gens.emplace_back(1, +1);
    CHECK(symmetry_defect(sigma1_cubed));
    CHECK(alexander(sigma1_cubed).str() == "t^2 - t + 1");
}

TEST_CASE("reduced and unreduced routes agree on random small words") {
    std::mt19937 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const LRWord w = random_knot_word(rng, 8);
        const Braid b = modular_braid(w);
        CHECK(alexander(b) == alexander_unreduced_check(b));
        CHECK(alexander(b) == alexander_of_word(w));
    }
}

TEST_CASE("non-knot closures are rejected") {
    CHECK_THROWS_AS(alexander_of_spec(parse_spec("3,3")), NotAKnot);
    Braid identity2;
    identity2.strands = 2;
    CHECK_THROWS_AS(alexander(identity2), NotAKnot);
}

TEST_CASE("normalization invariants") {
    std::mt19937 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const AlexanderPoly d = alexander_of_word(random_knot_word(rng));
        REQUIRE(!d.coeffs.empty());
        CHECK(d.coeffs.front() == 1);
        CHECK(d.coeffs.back() == 1);
        Int at1 = 0;
        for (const Int& c : d.coeffs) at1 += c;
        CHECK(at1 == 1);
        for (std::size_t i = 0; i < d.coeffs.size(); ++i)
            CHECK(d.coeffs[i] == d.coeffs[d.coeffs.size() - 1 - i]);
        CHECK(d.degree() % 2 == 0);
    }
}

TEST_CASE("family oracles at small sizes") {
    // Family of 𝕃(2,n;3,4;n+2,2):
    for (long n = 2; n <= 6; n += 2) {
        const LorenzSpec spec = make_spec({{2, n}, {3, 4}, {n + 2, 2}});
        CHECK(family_A_oracle(n) == alexander_of_spec(spec));
    }
    CHECK_THROWS_AS(family_A_oracle(3), PrecondViolated);
    // Family of 𝕃(n,n;n+1,2n): trefoil at n = 1, and both closed forms agree.
    CHECK(family_B_oracle(1).str() == "t^2 - t + 1");
    for (long n = 1; n <= 4; ++n) {
        CHECK(family_B_oracle(n) == family_B_product_form(n));
        const LorenzSpec spec = make_spec({{n, n}, {n + 1, 2 * n}});
        CHECK(family_B_oracle(n) == alexander_of_spec(spec));
    }
}
