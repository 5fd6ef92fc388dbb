// File: alexander.cpp
// Alexander polynomials of braid closures and Lorenz knots.

#include "modknot/alexander.hpp"

#include <algorithm>
#include <optional>

namespace modknot {

namespace {

// (1 − t^e) as a LaurentPoly.
LaurentPoly one_minus_t_pow(long e) {
    return LaurentPoly::one() - LaurentPoly::t_power(e);
}

} // namespace

AlexanderPoly normalize_alexander(const LaurentPoly& raw) {
    if (raw.is_zero())
        throw InternalError("normalize_alexander: zero polynomial");
    std::vector<Int> c = raw.coeffs();
    if (c.front() == -1)
        for (Int& x : c) x = -x;
    if (c.front() != 1 || c.back() != 1)
        throw InternalError("normalize_alexander: extreme coefficients are not units");
    for (std::size_t i = 0, j = c.size() - 1; i < j; ++i, --j)
        if (c[i] != c[j])
            throw InternalError("normalize_alexander: polynomial is not reciprocal");
    Int sum = 0;
    for (const Int& x : c) sum += x;
    if (sum != 1)
        throw InternalError("normalize_alexander: value at t = 1 is not 1");
    return AlexanderPoly{std::move(c)};
}

LaurentPoly alexander_raw(const Braid& b) {
    if (b.strands == 1) return LaurentPoly::one(); // 1-strand closure: unknot
    const LaurentMatrix m = burau(b, BurauVariant::reduced);
    const int dim = b.strands - 1;
    LaurentMatrix d(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            d.at(i, j) = (i == j ? LaurentPoly::one() - m.at(i, j) : -m.at(i, j));
    return lp_div_exact(mat_det(d), q_cyclotomic_bracket(b.strands));
}

AlexanderPoly alexander(const Braid& b) {
    if (cycle_count(braid_permutation(b)) != 1)
        throw NotAKnot("alexander: braid closure is not a knot");
    return normalize_alexander(alexander_raw(b));
}

AlexanderPoly alexander_unreduced_check(const Braid& b) {
    if (cycle_count(braid_permutation(b)) != 1)
        throw NotAKnot("alexander_unreduced_check: braid closure is not a knot");
    if (b.strands == 1) return AlexanderPoly{{Int(1)}};
    const LaurentMatrix m = burau(b, BurauVariant::full);
    const BivariatePoly charpoly = bivar_det(BivariateMatrix::char_matrix(m));
    // The fixed all-ones eigenvector contributes the factor (s − 1).
    const BivariatePoly s_minus_one =
        BivariatePoly::s_term(1, LaurentPoly::one()) - BivariatePoly(LaurentPoly::one());
    const LaurentPoly at_one = bivar_div_exact(charpoly, s_minus_one).at_s_one();
    return normalize_alexander(lp_div_exact(at_one, q_cyclotomic_bracket(b.strands)));
}

long alexander_degree_formula(const LorenzSpec& spec) {
    long deg = 1 - spec.strand_count();
    for (std::size_t j = 0; j < spec.pairs.size(); ++j)
        deg += spec.P(j + 1) * spec.pairs[j].second;
    return deg;
}

long genus(const AlexanderPoly& p) {
    if (p.degree() % 2 != 0)
        throw OddDegree("genus: Alexander polynomial has odd degree");
    return p.degree() / 2;
}

bool symmetry_defect(const Braid& b) {
    const long e = exponent_sum(b);
    const long k = b.strands - 1 - e; // exponent of the (−t) unit
    if (((e - b.strands + 1) % 2 + 2) % 2 != 0)
        throw PrecondViolated("symmetry_defect: exponent sum parity violated");
    const LaurentPoly raw = alexander_raw(b);
    LaurentPoly rhs = raw.shifted(k);
    if (k % 2 != 0) rhs = -rhs;
    return raw.inverted_variable() == rhs;
}

AlexanderPoly alexander_of_spec(const LorenzSpec& spec) {
    const LRWord w = word_from_spec(spec); // throws NotAKnot on multi-component closures
    // The template symmetry L↔R preserves the knot; the T-braid reduction
    // lives in B_{≤P_r}, so prefer the orientation with the smaller P_r.
    const LorenzSpec flipped = spec_from_word(flip_word(w));
    std::vector<LorenzSpec> candidates =
        flipped.Pr() < spec.Pr() ? std::vector<LorenzSpec>{flipped, spec}
                                 : std::vector<LorenzSpec>{spec, flipped};
    for (const LorenzSpec& s : candidates)
        if (s.pairs.front().first > 1 && s.pairs.back().second > 1)
            return alexander(braid_from_tspec(tbraid_from_spec(s)));
    return alexander(modular_braid(w));
}

AlexanderPoly alexander_of_word(const LRWord& w) {
    return alexander_of_spec(spec_from_word(w));
}

AlexanderPoly family_A_oracle(long n) {
    if (n < 2 || n % 2 != 0)
        throw PrecondViolated("family_A_oracle: n must be even and >= 2");
    const long lo[] = {0, 1, 5, 10};
    const long lo_neg[] = {2, 3, 9};
    LaurentPoly num;
    for (long e : lo) num = num + LaurentPoly::t_power(e);
    for (long e : lo_neg) num = num - LaurentPoly::t_power(e);
    const long mid_pos[] = {n + 6, n + 11, n + 13, n + 18};
    const long mid_neg[] = {n + 10, n + 14};
    for (long e : mid_pos) num = num + LaurentPoly::t_power(e);
    for (long e : mid_neg) num = num - LaurentPoly::t_power(e);
    const long hi_pos[] = {2 * n + 14, 2 * n + 19, 2 * n + 23, 2 * n + 24};
    const long hi_neg[] = {2 * n + 15, 2 * n + 21, 2 * n + 22};
    for (long e : hi_pos) num = num + LaurentPoly::t_power(e);
    for (long e : hi_neg) num = num - LaurentPoly::t_power(e);
    const LaurentPoly one_plus_t = LaurentPoly::one() + LaurentPoly::t_power(1);
    return normalize_alexander(lp_div_exact(num, one_plus_t * one_plus_t));
}

AlexanderPoly family_B_oracle(long n) {
    if (n < 1) throw PrecondViolated("family_B_oracle: n must be >= 1");
    LaurentPoly m = one_minus_t_pow(n * (5 * n + 1));
    LaurentPoly sum1, sum2;
    for (long j = 1; j <= n - 1; ++j) {
        sum1 = sum1 + LaurentPoly::t_power(3 * n * j);
        sum2 = sum2 + LaurentPoly::t_power((3 * n + 1) * j - n);
    }
    m = m + one_minus_t_pow(n * (2 * n + 1)) * sum1
          - one_minus_t_pow(2 * n * (n + 1)) * sum2;
    LaurentPoly num = one_minus_t_pow(1) * m;
    num = lp_div_exact(num, one_minus_t_pow(2 * n + 1));
    num = lp_div_exact(num, one_minus_t_pow(2 * n));
    return normalize_alexander(num);
}

AlexanderPoly family_B_product_form(long n) {
    if (n < 1) throw PrecondViolated("family_B_product_form: n must be >= 1");
    LaurentPoly sum_x, sum_y;
    for (long j = 1; j <= n - 1; ++j) {
        sum_x = sum_x + LaurentPoly::t_power(2 * n * n + (3 * n + 1) * j);
        sum_y = sum_y + LaurentPoly::t_power(2 * n * n + (3 * j + 1) * n);
    }
    const LaurentPoly head = one_minus_t_pow(n * (5 * n + 1));
    const LaurentPoly x = head - one_minus_t_pow(n) * sum_x;
    const LaurentPoly y = head - one_minus_t_pow(n) * sum_y;
    const LaurentPoly x_tilde = one_minus_t_pow(n * (2 * n + 1));
    const LaurentPoly y_tilde = one_minus_t_pow(2 * n * (n + 1));
    LaurentPoly num = -(x_tilde * y - x * y_tilde).shifted(-n * (2 * n + 1));
    num = num * one_minus_t_pow(1);
    num = lp_div_exact(num, one_minus_t_pow(n));
    num = lp_div_exact(num, one_minus_t_pow(2 * n + 1));
    num = lp_div_exact(num, one_minus_t_pow(2 * n));
    return normalize_alexander(num);
}

} // namespace modknot
