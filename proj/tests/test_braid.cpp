// File: test_braid.cpp
// Lorenz permutations, modular braids, spec/word round trips, T-braid
// reduction, trip numbers.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "modknot/braid.hpp"
#include "modknot/burau.hpp"

using namespace modknot;

namespace {

const LorenzSpec kRunningSpec = parse_spec("2,4:1,2:3,1:2,2");
const LRWord kRunningWord = parse_word("LLLLRRRLLLLRRRLRR");

LRWord random_knot_word(std::mt19937& rng, int max_len = 14) {
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

TEST_CASE("spec parsing and prefix sums") {
    CHECK(kRunningSpec.pairs ==
          std::vector<std::pair<long, long>>{{2, 4}, {1, 2}, {3, 1}, {2, 2}});
    CHECK(kRunningSpec.str() == "2,4:1,2:3,1:2,2");
    CHECK(kRunningSpec.Pr() == 8);
    CHECK(kRunningSpec.Qr() == 9);
    CHECK(kRunningSpec.strand_count() == 17);
    CHECK(kRunningSpec.P(2) == 3);
    CHECK(kRunningSpec.Q(2) == 6);
    CHECK_THROWS_AS(parse_spec(""), ParseError);
    CHECK_THROWS_AS(parse_spec("2;3"), ParseError);
    CHECK_THROWS_AS(parse_spec("2,0"), PrecondViolated);
}

TEST_CASE("lorenz_permutation of the running example") {
    const Permutation pi = lorenz_permutation(kRunningSpec);
    CHECK(pi.images == std::vector<int>{3, 4, 5, 6, 8, 9, 13, 16, 17,
                                        1, 2, 7, 10, 11, 12, 14, 15});
    CHECK(cycle_count(pi) == 1);
    CHECK(components(kRunningSpec) == 1);
    CHECK(components(parse_spec("3,3")) == 3);
}

TEST_CASE("word/spec round trips") {
    CHECK(word_from_spec(kRunningSpec) == kRunningWord);
    CHECK(spec_from_word(kRunningWord) == kRunningSpec);
    CHECK(spec_from_word(parse_word("LRLRR")) == parse_spec("3,2"));
    CHECK_THROWS_AS(word_from_spec(parse_spec("3,3")), NotAKnot);
    std::mt19937 rng(21);
    for (int trial = 0; trial < 150; ++trial) {
        const LRWord w = random_knot_word(rng);
        const LorenzSpec spec = spec_from_word(w);
        CHECK(word_from_spec(spec) == w);
        // The permutation has one cycle and the word length is the strand count.
        CHECK(spec.strand_count() == static_cast<long>(w.size()));
    }
}

TEST_CASE("braid_permutation and permutation_braid") {
    // σ₂σ₁σ₃σ₂σ₄σ₃ in B₅ realizes the 5-cycle of LRLRR.
    Braid b;
    b.strands = 5;
    for (int j : {2, 1, 3, 2, 4, 3}) b.gens.emplace_back(j, +1);
    CHECK(braid_permutation(b).images == std::vector<int>{4, 5, 1, 2, 3});

    std::mt19937 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        // Random permutation; its positive braid must realize it with a
        // generator count equal to the inversion number.
        std::vector<int> img(static_cast<std::size_t>(3 + trial % 8));
        std::iota(img.begin(), img.end(), 1);
        std::shuffle(img.begin(), img.end(), rng);
        const Permutation pi{img};
        const Braid pb = permutation_braid(pi);
        CHECK(braid_permutation(pb) == pi);
        long inversions = 0;
        for (std::size_t i = 0; i < img.size(); ++i)
            for (std::size_t j = i + 1; j < img.size(); ++j)
                if (img[i] > img[j]) ++inversions;
        CHECK(exponent_sum(pb) == inversions);
    }
}

TEST_CASE("modular braid of the running example") {
    const Braid b = modular_braid(kRunningWord);
    CHECK(b.strands == 17);
    CHECK(b.gens.size() == 36);
    // Same braid (up to positive-word equivalence) as the Lorenz
    // permutation braid: equal Burau matrices.
    const Braid lorenz = permutation_braid(lorenz_permutation(kRunningSpec));
    CHECK(burau(b, BurauVariant::full) == burau(lorenz, BurauVariant::full));

    // The 5-strand trefoil example braid.
    Braid trefoil;
    trefoil.strands = 5;
    for (int j : {2, 1, 3, 2, 4, 3}) trefoil.gens.emplace_back(j, +1);
    CHECK(burau(modular_braid(parse_word("LRLRR")), BurauVariant::full) ==
          burau(trefoil, BurauVariant::full));
    CHECK_THROWS_AS(modular_braid(parse_word("LL")), MonoletterWord);
}

TEST_CASE("tbraid reduction") {
    const TBraidSpec t = tbraid_from_spec(kRunningSpec);
    CHECK(t.pairs ==
          std::vector<std::pair<long, long>>{{2, 4}, {3, 2}, {6, 1}, {8, 2}});
    CHECK(t.str() == "(2,4)(3,2)(6,1)(8,2)");
    const Braid b = braid_from_tspec(t);
    CHECK(b.strands == 8);
    CHECK(b.gens.size() == 27);
    CHECK_THROWS_AS(tbraid_from_spec(parse_spec("1,2:2,3")), PrecondViolated);
    CHECK_THROWS_AS(tbraid_from_spec(parse_spec("2,2:2,1")), PrecondViolated);
}

TEST_CASE("trip number and braid index") {
    CHECK(trip_number(kRunningSpec) == 3);
    CHECK(braid_index(kRunningWord) == 3);
    CHECK(trip_number(parse_spec("3,2")) == 2);
    CHECK(trip_number(parse_spec("2,3")) == 2);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const LRWord w = random_knot_word(rng);
        CHECK(trip_number(spec_from_word(w)) == braid_index(w));
    }
}
