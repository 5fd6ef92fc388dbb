// File: burau.hpp
// ----------------------------------------------------------------
// Purpose: Burau and reduced Burau representations, and the closed-form
// block Burau matrix of a Lorenz braid.
//
// Mathematical basis:
//   β_n(σ_j) = I_{j−1} ⊕ (1−t  t; 1  0) ⊕ I_{n−j−1}; every full Burau
//   image fixes the all-ones vector (row sums are 1) and has determinant
//   (−t)^{|σ|}. The reduced representation β_n^r acts on dimension n−1
//   with the three j-position cases of §6.1 conventions; for n = 2 it is
//   the 1×1 matrix (−t).
// ----------------------------------------------------------------
#ifndef MODKNOT_BURAU_HPP
#define MODKNOT_BURAU_HPP

#include "modknot/braid.hpp"
#include "modknot/matrix.hpp"

namespace modknot {

enum class BurauVariant { full, reduced };

// Image of σ_j^{±1} in B_n, n×n.
LaurentMatrix burau_generator(int n, int j, int sign);

// Image of σ_j^{±1} under the reduced representation, (n−1)×(n−1).
LaurentMatrix reduced_burau_generator(int n, int j, int sign = +1);

// Ordered left-to-right product over the braid word. Positive generators
// are applied as sparse column operations; negative ones fall back to a
// full matrix product.
LaurentMatrix burau(const Braid& b, BurauVariant variant);

// The explicit (P_r+Q_r)×(P_r+Q_r) block matrix of a Lorenz braid, built
// directly (no generator products): q-row-block i carries A_{q_i,p_1},
// t^{P_{j−1}}A_{q_i,p_j} for 2 ≤ j ≤ i and t^{P_i}I_{q_i}; p-row-block j
// carries I_{p_j}; A_{q,p} = (1−t)·(q identical rows 1, t, …, t^{p−1}).
LaurentMatrix burau_lorenz(const LorenzSpec& spec);

// burau_lorenz at t = 1: the 0/1 permutation matrix of the Lorenz
// permutation (row i has its 1 in column π(i)).
IntMatrix permutation_matrix(const LorenzSpec& spec);

// Multiplicity of the eigenvalue 1, computed as n − rank(M − I) with exact
// integer elimination.
int eigenvalue_one_multiplicity(const IntMatrix& m);

} // namespace modknot

#endif // MODKNOT_BURAU_HPP
