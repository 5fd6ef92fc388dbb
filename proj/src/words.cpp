// File: words.cpp
// Primitive L/R word combinatorics.

#include "modknot/words.hpp"

#include <algorithm>
#include <numeric>

namespace modknot {

namespace {

void require_both_letters(const LRWord& w, const char* op) {
    const bool has_l = w.letters.find('L') != std::string::npos;
    const bool has_r = w.letters.find('R') != std::string::npos;
    if (!has_l || !has_r)
        throw MonoletterWord(std::string(op) + ": word must contain both L and R");
}

std::string rotation(const std::string& s, std::size_t start) {
    return s.substr(start) + s.substr(0, start);
}

} // namespace

LRWord parse_word(const std::string& s) {
    if (s.empty()) throw ParseError("word: empty");
    for (char c : s)
        if (c != 'L' && c != 'R')
            throw ParseError(std::string("word: invalid character '") + c + "'");
    return LRWord{s};
}

bool is_primitive(const std::string& letters) {
    const std::size_t n = letters.size();
    if (n == 0) return false;
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < n && repeats; ++i)
            repeats = letters[i] == letters[i - d];
        if (repeats) return false;
    }
    return true;
}

LRWord lyndon_canonical(const LRWord& w) {
    if (!is_primitive(w.letters))
        throw PrecondViolated("lyndon_canonical: word must be primitive");
    std::string best = w.letters;
    for (std::size_t i = 1; i < w.letters.size(); ++i)
        best = std::min(best, rotation(w.letters, i));
    return LRWord{best};
}

LRWord word_from_period(const std::vector<Int>& period) {
    if (period.empty() || period.size() % 2 != 0)
        throw OddPeriod("word_from_period: period length must be even and positive");
    std::string s;
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (period[i] < 1 || !period[i].fits_slong_p())
            throw PrecondViolated("word_from_period: entries must be small positive integers");
        s.append(static_cast<std::size_t>(period[i].get_si()), i % 2 == 0 ? 'L' : 'R');
    }
    return LRWord{s};
}

std::vector<Int> period_from_word(const LRWord& w) {
    require_both_letters(w, "period_from_word");
    const LRWord c = lyndon_canonical(w);
    std::vector<Int> period;
    std::size_t i = 0;
    while (i < c.letters.size()) {
        std::size_t j = i;
        while (j < c.letters.size() && c.letters[j] == c.letters[i]) ++j;
        period.emplace_back(static_cast<long>(j - i));
        i = j;
    }
    return period;
}

std::vector<int> ranks(const LRWord& w) {
    if (!is_primitive(w.letters))
        throw PrecondViolated("ranks: word must be primitive");
    const std::size_t n = w.letters.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return rotation(w.letters, a) < rotation(w.letters, b);
    });
    std::vector<int> rk(n);
    for (std::size_t pos = 0; pos < n; ++pos)
        rk[order[pos]] = static_cast<int>(pos) + 1;
    return rk;
}

int max_rotation_index(const LRWord& w) {
    const std::vector<int> rk = ranks(w);
    for (std::size_t j = 0; j < rk.size(); ++j)
        if (rk[j] == static_cast<int>(rk.size())) return static_cast<int>(j) + 1;
    throw InternalError("max_rotation_index: rank sequence is not a permutation");
}

LRWord markov_left(const LRWord& w) {
    if (!(w == lyndon_canonical(w)))
        throw NotLyndon("markov_left: word must be Lyndon");
    return LRWord{"L" + w.letters};
}

LRWord markov_right(const LRWord& w) {
    if (!(w == lyndon_canonical(w)))
        throw NotLyndon("markov_right: word must be Lyndon");
    const int m = max_rotation_index(w);
    std::string s = w.letters;
    s.insert(static_cast<std::size_t>(m), "R");
    return LRWord{s};
}

Fraction bernoulli_rational(const LRWord& w) {
    require_both_letters(w, "bernoulli_rational");
    Int v = 0;
    for (char c : w.letters) {
        v <<= 1;
        if (c == 'R') v += 1;
    }
    Int den = (Int(1) << w.letters.size()) - 1;
    const Int g = gcd(v, den);
    return Fraction{v / g, den / g};
}

std::string christoffel_lower(long p, long q) {
    if (!(0 < p && p < q) || std::gcd(p, q) != 1)
        throw BadFraction("christoffel_lower: need 0 < p < q with gcd(p,q) = 1");
    std::string s(static_cast<std::size_t>(q), 'A');
    for (long j = 1; j <= p; ++j) {
        const long pos = (q * j + p - 1) / p; // ceil(qj/p)
        s[static_cast<std::size_t>(pos - 1)] = 'B';
    }
    return s;
}

LRWord substitute(const std::string& ab_word, const std::string& image_a,
                  const std::string& image_b) {
    std::string s;
    for (char c : ab_word) {
        if (c == 'A') s += image_a;
        else if (c == 'B') s += image_b;
        else throw ParseError("substitute: word must be over {A,B}");
    }
    return parse_word(s);
}

LRWord dual_word(const LRWord& w) {
    std::string s(w.letters.rbegin(), w.letters.rend());
    for (char& c : s) c = (c == 'L') ? 'R' : 'L';
    return lyndon_canonical(LRWord{s});
}

LRWord flip_word(const LRWord& w) {
    std::string s = w.letters;
    for (char& c : s) c = (c == 'L') ? 'R' : 'L';
    return lyndon_canonical(LRWord{s});
}

int trip_count(const LRWord& w) {
    require_both_letters(w, "trip_count");
    const std::size_t n = w.letters.size();
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (w.letters[i] == 'L' && w.letters[(i + 1) % n] == 'R') ++count;
    return count;
}

} // namespace modknot
