// File: invariants.hpp
// ----------------------------------------------------------------
// Purpose: The Rademacher function on even periods, its reading as the
// linking number with the trefoil orbit, and the class-number formula
// h(−p) = (1/3) Σ (−1)^j c_j over the even continued-fraction period
// of √p for primes p ≡ 3 (mod 4), p > 3.
// ----------------------------------------------------------------
#ifndef MODKNOT_INVARIANTS_HPP
#define MODKNOT_INVARIANTS_HPP

#include "modknot/quad.hpp"
#include "modknot/words.hpp"

namespace modknot {

// Ψ(c₁,…,c₂ℓ) = c₁ − c₂ + c₃ − … − c₂ℓ. Throws OddPeriod on odd/empty input.
Int rademacher(const std::vector<Int>& period);

// Linking number of the modular knot of w with the trefoil orbit:
// Ψ of the run-length period of w.
Int linking_with_trefoil(const LRWord& w);

// Class number of ℚ(√−p) for a prime p > 3 with p ≡ 3 (mod 4), read off
// the period of √p = [c₀; overline{c₁,…,c₂ℓ}] as −Ψ(c₁,…,c₂ℓ)/3.
// Throws BadPrime on a bad modulus and NotDivisibleBy3 if the alternating
// sum fails the divisibility the theorem guarantees.
Int hz_class_number(const Int& p);

// The exposed geodesic word L^{c₂}R^{c₃} ⋯ L^{c₂ℓ}R^{c₁} of √p
// (e.g. p = 7 → LRL⁴R).
LRWord sqrt_prime_word(const Int& p);

} // namespace modknot

#endif // MODKNOT_INVARIANTS_HPP
