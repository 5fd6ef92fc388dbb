// File: words.hpp
// ----------------------------------------------------------------
// Purpose: Primitive words over {L, R}: primitivity, Lyndon canonical
// rotation, cyclic rank sequences, Markov moves, the Bernoulli-shift
// rational, Christoffel words, duality and flip transforms.
//
// Serialization: a word is the plain string over the characters 'L' and
// 'R'; the parser rejects anything else.
//
// Complexity note: rank sequences sort all rotations naively
// (O(n² log n)) and Lyndon canonicalization takes the naive minimum over
// rotations (O(n²)); word lengths in scope are at most a few hundred, so
// correctness and clarity win over suffix-array machinery.
// ----------------------------------------------------------------
#ifndef MODKNOT_WORDS_HPP
#define MODKNOT_WORDS_HPP

#include <string>
#include <vector>

#include "modknot/laurent.hpp"

namespace modknot {

struct LRWord {
    std::string letters; // non-empty, over {'L','R'}
    bool operator==(const LRWord& o) const { return letters == o.letters; }
    std::size_t size() const { return letters.size(); }
    std::string str() const { return letters; }
};

// Validating parser (ParseError on empty input or foreign characters).
LRWord parse_word(const std::string& s);

// True iff the word is not a repetition of a strictly shorter word.
bool is_primitive(const std::string& letters);

// The unique rotation that is a Lyndon word (lexicographic minimum, L < R).
LRWord lyndon_canonical(const LRWord& w);

// L^{c1} R^{c2} … L^{c_{2ℓ-1}} R^{c_{2ℓ}}.
LRWord word_from_period(const std::vector<Int>& period);

// Run-length exponents of the Lyndon rotation (starts with L, ends with R).
// Throws MonoletterWord for the words L and R.
std::vector<Int> period_from_word(const LRWord& w);

// rank_j = 1-based position of the (j-1)-fold rotation among all rotations
// sorted lexicographically. Requires primitivity (all rotations distinct).
std::vector<int> ranks(const LRWord& w);

// m_W: the j with rank_j = length(w).
int max_rotation_index(const LRWord& w);

// Markov moves on Lyndon words (Lemma-3.3 moves preserving the closure).
LRWord markov_left(const LRWord& w);  // L·w
LRWord markov_right(const LRWord& w); // R inserted after position m_W

// The reduced fraction v/(2^n - 1) whose binary expansion repeats w with
// L→0, R→1.
struct Fraction {
    Int num, den;
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};
Fraction bernoulli_rational(const LRWord& w);

// Lower Christoffel word ch_{p/q}(A,B): length q, the j-th B at position
// ⌈qj/p⌉ (1-indexed). Requires 0 < p < q, gcd(p,q) = 1.
std::string christoffel_lower(long p, long q);

// Substitute A→imageA, B→imageB in a word over {A,B}.
LRWord substitute(const std::string& ab_word, const std::string& image_a,
                  const std::string& image_b);

// Reverse the word and swap L↔R, then Lyndon-canonicalize.
LRWord dual_word(const LRWord& w);

// Swap L↔R letterwise, then Lyndon-canonicalize.
LRWord flip_word(const LRWord& w);

// Number of cyclic occurrences of the factor LR (= maximal R-runs).
int trip_count(const LRWord& w);

} // namespace modknot

#endif // MODKNOT_WORDS_HPP
