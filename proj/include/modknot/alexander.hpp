// File: alexander.hpp
// ----------------------------------------------------------------
// Purpose: Alexander polynomials of braid closures via the reduced
// Burau route, the bivariate cross-check route, normalization, the
// degree/genus formulas, symmetry checks, and the two closed-form
// family oracles.
//
// Mathematical basis:
//   Δ_{σ̂}(t) = det(I_{n−1} − β_n^r(σ)) / [n]_t
//            = (1/[n]_t) · lim_{s→1} det(sI_n − β_n(σ))/(s−1),
//   normalized by a unit ±t^k to the monic reciprocal polynomial with
//   constant term +1 (every displayed polynomial in scope). The raw
//   Laurent quotient is exposed for the symmetry test
//   Δ(1/t) = (−t)^{−|σ|+n−1} Δ(t).
// ----------------------------------------------------------------
#ifndef MODKNOT_ALEXANDER_HPP
#define MODKNOT_ALEXANDER_HPP

#include "modknot/braid.hpp"
#include "modknot/burau.hpp"

namespace modknot {

// Normalized invariant: ascending coefficients from exponent 0 with
// constant term 1, leading coefficient 1, reciprocal, value 1 at t = 1.
struct AlexanderPoly {
    std::vector<Int> coeffs; // {1} for the unknot

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    bool operator==(const AlexanderPoly& o) const { return coeffs == o.coeffs; }
    bool operator<(const AlexanderPoly& o) const { return coeffs < o.coeffs; }
    LaurentPoly poly() const { return LaurentPoly::from_coeffs(0, coeffs); }
    std::string str() const { return poly().str(); }
};

// Unit-normalize a Laurent polynomial into an AlexanderPoly; verifies the
// invariants (reciprocity, constant/leading +1, value 1 at t = 1).
AlexanderPoly normalize_alexander(const LaurentPoly& raw);

// Raw quotient det(I − β^r)/[n]_t before unit normalization.
LaurentPoly alexander_raw(const Braid& b);

// Production route (reduced Burau). Throws NotAKnot when the closure of b
// has more than one component.
AlexanderPoly alexander(const Braid& b);

// Cross-check route via the bivariate characteristic polynomial; must
// equal alexander(b). Intended for small strand counts only.
AlexanderPoly alexander_unreduced_check(const Braid& b);

// deg Δ = Σ_j P_j q_j − (P_r + Q_r) + 1.
long alexander_degree_formula(const LorenzSpec& spec);

// Genus = deg/2; throws OddDegree on odd degrees.
long genus(const AlexanderPoly& p);

// True iff the raw quotient satisfies Δ(1/t) = (−t)^{−|σ|+n−1} Δ(t);
// also asserts that |σ| − n + 1 is even.
bool symmetry_defect(const Braid& b);

// Fast Alexander polynomial of a Lorenz spec closure: flips to the
// orientation with the smaller P_r and reduces through the T-braid when
// p₁, q_r > 1 (same closure, far fewer strands).
AlexanderPoly alexander_of_spec(const LorenzSpec& spec);
AlexanderPoly alexander_of_word(const LRWord& w);

// Closed form for Δ(𝕃(2,n;3,4;n+2,2)), the word
// L^{m+1}R^{m+1}LR^{m+1}LRLRL^mR with m = n/2+1 (even n ≥ 2).
AlexanderPoly family_A_oracle(long n);

// Closed form for Δ(𝕃(n,n;n+1,2n)), the word (LLR)^n(LR)^nR (n ≥ 1),
// from the simplified single-fraction expression.
AlexanderPoly family_B_oracle(long n);

// The alternative product form (X̃Y − XỸ) of the same family, implemented
// only to self-test family_B_oracle.
AlexanderPoly family_B_product_form(long n);

} // namespace modknot

#endif // MODKNOT_ALEXANDER_HPP
