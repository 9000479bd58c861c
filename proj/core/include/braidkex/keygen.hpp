#pragma once

#include <cstdint>
#include <vector>

#include "braidkex/braid_word.hpp"
#include "braidkex/rng.hpp"

namespace braidkex {

// Knobs for private-key and published-subgroup generation.
struct SamplerConfig {
    int n = 64;
    int l = 1024;        // length of the pre-conjugation private word
    int gen_count = 5;   // published subgroup generators
    int gen_len = 256;   // length of each pre-conjugation generator word
    int conj_len = 512;  // length of the concealing conjugator
    std::uint64_t seed = 0;

    // gen_count=5, gen_len=l/4, conj_len=l/2 (clamped to at least 1).
    static SamplerConfig defaults(int n, int l, std::uint64_t seed);
    void validate() const;
};

// Which block of strands the private element lives on.  The published
// generators use the complementary block, so commutation is structural.
enum class Side { LeftHalf, RightHalf };

// A private element together with published generators it commutes with:
// private_elem = z.u.z^-1 over one strand half, subgroup_gens = { z.v_j.z^-1 }
// over the other half, sharing the conjugator z.  The conjugator is retained
// for test introspection only; it never goes on the wire.
struct CommutingPair {
    BraidWord private_elem;
    std::vector<BraidWord> subgroup_gens;
    BraidWord conjugator;
};

// Freely reduced word of exactly `length` letters: uniform signed-generator
// steps that never immediately cancel.
BraidWord random_word(int n, int length, Rng& rng);

CommutingPair generate_commuting_pair(const SamplerConfig& cfg, Side side, Rng& rng);

// Product of factor_budget uniformly chosen generators or inverses.
BraidWord sample_subgroup_element(const std::vector<BraidWord>& gens, int factor_budget, Rng& rng);

}  // namespace braidkex
