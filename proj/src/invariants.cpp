// File: invariants.cpp
// Rademacher function, trefoil linking numbers, class numbers.

#include "modknot/invariants.hpp"

namespace modknot {

namespace {

bool is_prime(const Int& p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Even CF period of √p.
std::vector<Int> sqrt_prime_period(const Int& p) {
    if (p <= 3 || p % 4 != 3 || !is_prime(p))
        throw BadPrime("expected a prime p > 3 with p ≡ 3 (mod 4)");
    return cf_expand(make_surd(0, p, 1)).period;
}

} // namespace

Int rademacher(const std::vector<Int>& period) {
    if (period.empty() || period.size() % 2 != 0)
        throw OddPeriod("rademacher: period must be non-empty of even length");
    Int sum = 0;
    for (std::size_t j = 0; j < period.size(); ++j)
        sum += (j % 2 == 0) ? period[j] : -period[j];
    return sum;
}

Int linking_with_trefoil(const LRWord& w) {
    return rademacher(period_from_word(w));
}

Int hz_class_number(const Int& p) {
    // Σ (−1)^j c_j with j starting at 1 is −Ψ of the period.
    const Int sum = -rademacher(sqrt_prime_period(p));
    if (sum % 3 != 0)
        throw NotDivisibleBy3("hz_class_number: alternating sum not divisible by 3");
    return sum / 3;
}

LRWord sqrt_prime_word(const Int& p) {
    std::vector<Int> period = sqrt_prime_period(p);
    // Rotate (c₁,…,c₂ℓ) to (c₂,…,c₂ℓ,c₁): the word reads the period from c₂.
    period.push_back(period.front());
    period.erase(period.begin());
    return word_from_period(period);
}

} // namespace modknot
