// File: braid.hpp
// ----------------------------------------------------------------
// Purpose: Braid words, Lorenz braid specifications, the modular braid
// of a primitive L/R word, T-braid reduction, permutations, component
// counts, trip number and braid index.
//
// Conventions:
//   * Braid words are read left-to-right, top-to-bottom; σ_j swaps the
//     strands currently at positions j and j+1.
//   * The Lorenz permutation sends top position i to the bottom position
//     obtained by filling the q-parts (in order) with the top positions
//     1..Q_r and the p-parts with top positions Q_r+1..Q_r+P_r, where the
//     bottom is partitioned left-to-right into blocks p₁,q₁,…,p_r,q_r.
//   * Text format for a spec: "p1,q1:p2,q2:…" (e.g. "2,4:1,2:3,1:2,2").
// ----------------------------------------------------------------
#ifndef MODKNOT_BRAID_HPP
#define MODKNOT_BRAID_HPP

#include <string>
#include <utility>
#include <vector>

#include "modknot/words.hpp"

namespace modknot {

struct Braid {
    int strands = 1;
    std::vector<std::pair<int, int>> gens; // (index in 1..strands-1, sign ±1)
    bool operator==(const Braid& o) const {
        return strands == o.strands && gens == o.gens;
    }
};

struct LorenzSpec {
    std::vector<std::pair<long, long>> pairs; // (p_j, q_j), all >= 1

    bool operator==(const LorenzSpec& o) const { return pairs == o.pairs; }
    bool operator<(const LorenzSpec& o) const { return pairs < o.pairs; }

    long P(std::size_t j) const; // p_1 + … + p_j  (P(0) = 0)
    long Q(std::size_t j) const; // q_1 + … + q_j  (Q(0) = 0)
    long Pr() const { return P(pairs.size()); }
    long Qr() const { return Q(pairs.size()); }
    long strand_count() const { return Pr() + Qr(); }

    std::string str() const; // "p1,q1:p2,q2:…"
};

// Validating constructor/parser for the text format.
LorenzSpec make_spec(std::vector<std::pair<long, long>> pairs);
LorenzSpec parse_spec(const std::string& s);

struct Permutation {
    std::vector<int> images; // images[i-1] = π(i), a bijection of 1..n

    int n() const { return static_cast<int>(images.size()); }
    int of(int i) const { return images[static_cast<std::size_t>(i - 1)]; }
    bool operator==(const Permutation& o) const { return images == o.images; }
};

int cycle_count(const Permutation& p);

// (r_k, s_k) pairs with 1 < r_1 < r_2 < …, s_k > 0.
struct TBraidSpec {
    std::vector<std::pair<long, long>> pairs;
    bool operator==(const TBraidSpec& o) const { return pairs == o.pairs; }
    std::string str() const; // "(r1,s1)(r2,s2)…"
};

Permutation lorenz_permutation(const LorenzSpec& spec);

// Number of link components of the closure = cycle count of the
// Lorenz permutation.
int components(const LorenzSpec& spec);

// Underlying permutation of a braid word (π(σ_j) = (j j+1)).
Permutation braid_permutation(const Braid& b);

// Positive permutation braid for π, emitted by a deterministic sweep that
// always swaps the highest inverted adjacent pair first. Any reduced
// positive word for π is equal in the braid group; correctness is enforced
// by Burau-matrix equality, not by a literal generator schedule.
Braid permutation_braid(const Permutation& pi);

// The modular braid of a primitive word: the positive permutation braid of
// rank_j ↦ rank_{j+1}.
Braid modular_braid(const LRWord& w);

// Lorenz spec read off the bottom row of the modular braid (alternating
// p/q block sizes, starting with a p-part).
LorenzSpec spec_from_word(const LRWord& w);

// Orbit of position 1 under the Lorenz permutation, emitting L for
// positions ≤ Q_r and R otherwise; Lyndon-canonicalized.
// Throws NotAKnot when the closure has more than one component.
LRWord word_from_spec(const LorenzSpec& spec);

// Birman–Kofman reduction data: d_i = π(i) − i for the top L positions,
// run-length encoded. Requires p₁ > 1 and q_r > 1.
TBraidSpec tbraid_from_spec(const LorenzSpec& spec);

// (σ₁…σ_{r₁−1})^{s₁} (σ₁…σ_{r₂−1})^{s₂} … ∈ B_{r_k}.
Braid braid_from_tspec(const TBraidSpec& t);

// Strands running from a top L-position to a bottom position > Q_r.
int trip_number(const LorenzSpec& spec);

// Braid index of the modular knot = trip count = half the period length.
int braid_index(const LRWord& w);

long exponent_sum(const Braid& b);

} // namespace modknot

#endif // MODKNOT_BRAID_HPP
