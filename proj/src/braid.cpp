// File: braid.cpp
// Lorenz braids, modular braids and T-braid reduction.

#include "modknot/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modknot {

long LorenzSpec::P(std::size_t j) const {
    long s = 0;
    for (std::size_t i = 0; i < j; ++i) s += pairs[i].first;
    return s;
}

long LorenzSpec::Q(std::size_t j) const {
    long s = 0;
    for (std::size_t i = 0; i < j; ++i) s += pairs[i].second;
    return s;
}

std::string LorenzSpec::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out << ":";
        out << pairs[i].first << "," << pairs[i].second;
    }
    return out.str();
}

LorenzSpec make_spec(std::vector<std::pair<long, long>> pairs) {
    if (pairs.empty()) throw PrecondViolated("LorenzSpec: at least one pair required");
    for (const auto& [p, q] : pairs)
        if (p < 1 || q < 1)
            throw PrecondViolated("LorenzSpec: all entries must be >= 1");
    return LorenzSpec{std::move(pairs)};
}

LorenzSpec parse_spec(const std::string& s) {
    std::vector<std::pair<long, long>> pairs;
    std::istringstream in(s);
    std::string chunk;
    while (std::getline(in, chunk, ':')) {
        const std::size_t comma = chunk.find(',');
        if (comma == std::string::npos)
            throw ParseError("spec: expected \"p,q\" pairs separated by ':'");
        try {
            std::size_t used_p = 0, used_q = 0;
            const long p = std::stol(chunk.substr(0, comma), &used_p);
            const long q = std::stol(chunk.substr(comma + 1), &used_q);
            if (used_p != comma || used_q != chunk.size() - comma - 1)
                throw ParseError("spec: trailing characters in \"" + chunk + "\"");
            pairs.emplace_back(p, q);
        } catch (const std::logic_error&) {
            throw ParseError("spec: invalid integer in \"" + chunk + "\"");
        }
    }
    if (pairs.empty()) throw ParseError("spec: empty");
    return make_spec(std::move(pairs));
}

std::string TBraidSpec::str() const {
    std::ostringstream out;
    for (const auto& [r, s] : pairs) out << "(" << r << "," << s << ")";
    return out.str();
}

int cycle_count(const Permutation& p) {
    std::vector<bool> seen(p.images.size(), false);
    int cycles = 0;
    for (int i = 1; i <= p.n(); ++i) {
        if (seen[static_cast<std::size_t>(i - 1)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = p.of(j))
            seen[static_cast<std::size_t>(j - 1)] = true;
    }
    return cycles;
}

Permutation lorenz_permutation(const LorenzSpec& spec) {
    const long n = spec.strand_count();
    const std::size_t r = spec.pairs.size();
    // Bottom positions of the q-parts and p-parts, left to right.
    std::vector<int> q_positions, p_positions;
    long pos = 0;
    for (std::size_t j = 0; j < r; ++j) {
        for (long k = 0; k < spec.pairs[j].first; ++k) p_positions.push_back(static_cast<int>(++pos));
        for (long k = 0; k < spec.pairs[j].second; ++k) q_positions.push_back(static_cast<int>(++pos));
    }
    Permutation pi;
    pi.images.resize(static_cast<std::size_t>(n));
    const long qr = spec.Qr();
    for (long i = 1; i <= qr; ++i)
        pi.images[static_cast<std::size_t>(i - 1)] = q_positions[static_cast<std::size_t>(i - 1)];
    for (long i = qr + 1; i <= n; ++i)
        pi.images[static_cast<std::size_t>(i - 1)] = p_positions[static_cast<std::size_t>(i - qr - 1)];
    return pi;
}

int components(const LorenzSpec& spec) {
    return cycle_count(lorenz_permutation(spec));
}

Permutation braid_permutation(const Braid& b) {
    std::vector<int> pos(static_cast<std::size_t>(b.strands));
    std::iota(pos.begin(), pos.end(), 1); // pos[p-1] = strand at position p
    for (const auto& [j, sign] : b.gens) {
        (void)sign; // the underlying permutation ignores crossing signs
        std::swap(pos[static_cast<std::size_t>(j - 1)], pos[static_cast<std::size_t>(j)]);
    }
    Permutation pi;
    pi.images.resize(static_cast<std::size_t>(b.strands));
    for (int p = 1; p <= b.strands; ++p)
        pi.images[static_cast<std::size_t>(pos[static_cast<std::size_t>(p - 1)] - 1)] = p;
    return pi;
}

Braid permutation_braid(const Permutation& pi) {
    const int n = pi.n();
    Braid b;
    b.strands = n;
    // strand[p-1] = strand currently occupying position p (top = identity).
    std::vector<int> strand(static_cast<std::size_t>(n));
    std::iota(strand.begin(), strand.end(), 1);
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int j = n - 1; j >= 1; --j) {
            const int a = strand[static_cast<std::size_t>(j - 1)];
            const int c = strand[static_cast<std::size_t>(j)];
            if (pi.of(a) > pi.of(c)) {
                b.gens.emplace_back(j, +1);
                std::swap(strand[static_cast<std::size_t>(j - 1)],
                          strand[static_cast<std::size_t>(j)]);
                swapped = true;
            }
        }
    }
    return b;
}

Braid modular_braid(const LRWord& w) {
    if (w.letters.find('L') == std::string::npos ||
        w.letters.find('R') == std::string::npos)
        throw MonoletterWord("modular_braid: word must contain both L and R");
    const std::vector<int> rk = ranks(w);
    const std::size_t n = rk.size();
    Permutation pi;
    pi.images.resize(n);
    for (std::size_t j = 0; j < n; ++j)
        pi.images[static_cast<std::size_t>(rk[j] - 1)] = rk[(j + 1) % n];
    return permutation_braid(pi);
}

LorenzSpec spec_from_word(const LRWord& w) {
    if (w.letters.find('L') == std::string::npos ||
        w.letters.find('R') == std::string::npos)
        throw MonoletterWord("spec_from_word: word must contain both L and R");
    const std::vector<int> rk = ranks(w);
    const int n = static_cast<int>(rk.size());
    const int q_total =
        static_cast<int>(std::count(w.letters.begin(), w.letters.end(), 'L'));
    // inverse[b-1] = top position whose strand lands at bottom position b.
    std::vector<int> inverse(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < rk.size(); ++j)
        inverse[static_cast<std::size_t>(rk[(j + 1) % rk.size()] - 1)] = rk[j];
    // Bottom positions originating from the top L side (ranks 1..q_total,
    // since rotations beginning with L sort first) form the q-parts.
    std::vector<std::pair<long, long>> pairs;
    int b = 1;
    if (inverse[0] <= q_total)
        throw InternalError("spec_from_word: bottom row does not start with a p-part");
    while (b <= n) {
        long p = 0, q = 0;
        while (b <= n && inverse[static_cast<std::size_t>(b - 1)] > q_total) { ++p; ++b; }
        while (b <= n && inverse[static_cast<std::size_t>(b - 1)] <= q_total) { ++q; ++b; }
        if (p == 0 || q == 0)
            throw InternalError("spec_from_word: bottom blocks do not alternate");
        pairs.emplace_back(p, q);
    }
    return make_spec(std::move(pairs));
}

LRWord word_from_spec(const LorenzSpec& spec) {
    const Permutation pi = lorenz_permutation(spec);
    if (cycle_count(pi) != 1)
        throw NotAKnot("word_from_spec: closure has " +
                       std::to_string(cycle_count(pi)) + " components");
    const long qr = spec.Qr();
    std::string s;
    int pos = 1;
    do {
        s += (pos <= qr) ? 'L' : 'R';
        pos = pi.of(pos);
    } while (pos != 1);
    return lyndon_canonical(LRWord{s});
}

TBraidSpec tbraid_from_spec(const LorenzSpec& spec) {
    if (spec.pairs.front().first <= 1 || spec.pairs.back().second <= 1)
        throw PrecondViolated("tbraid_from_spec: requires p_1 > 1 and q_r > 1");
    const Permutation pi = lorenz_permutation(spec);
    const long qr = spec.Qr();
    TBraidSpec t;
    for (long i = 1; i <= qr; ++i) {
        const long d = pi.of(static_cast<int>(i)) - i;
        if (!t.pairs.empty() && t.pairs.back().first == d) {
            ++t.pairs.back().second;
        } else {
            if (!t.pairs.empty() && t.pairs.back().first > d)
                throw InternalError("tbraid_from_spec: d-vector is not ascending");
            t.pairs.emplace_back(d, 1);
        }
    }
    return t;
}

Braid braid_from_tspec(const TBraidSpec& t) {
    if (t.pairs.empty())
        throw PrecondViolated("braid_from_tspec: empty spec");
    Braid b;
    b.strands = static_cast<int>(t.pairs.back().first);
    for (const auto& [r, s] : t.pairs)
        for (long rep = 0; rep < s; ++rep)
            for (long j = 1; j < r; ++j)
                b.gens.emplace_back(static_cast<int>(j), +1);
    return b;
}

int trip_number(const LorenzSpec& spec) {
    const Permutation pi = lorenz_permutation(spec);
    const long qr = spec.Qr();
    int trips = 0;
    for (long i = 1; i <= qr; ++i)
        if (pi.of(static_cast<int>(i)) > qr) ++trips;
    return trips;
}

int braid_index(const LRWord& w) { return trip_count(w); }

long exponent_sum(const Braid& b) {
    long s = 0;
    for (const auto& [j, sign] : b.gens) {
        (void)j;
        s += sign;
    }
    return s;
}

} // namespace modknot
