#include "braidkex/keygen.hpp"

#include <algorithm>

#include "braidkex/errors.hpp"

namespace braidkex {

SamplerConfig SamplerConfig::defaults(int n, int l, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.n = n;
    cfg.l = l;
    cfg.gen_count = 5;
    cfg.gen_len = std::max(1, l / 4);
    cfg.conj_len = std::max(1, l / 2);
    cfg.seed = seed;
    return cfg;
}

void SamplerConfig::validate() const {
    BraidParams params(n);
    if (l < 1 || gen_len < 1 || conj_len < 1) throw DomainError("sampler lengths must be >= 1");
    if (gen_count < 2) throw DomainError("gen_count must be >= 2");
}

BraidWord random_word(int n, int length, Rng& rng) {
    BraidParams params(n);
    if (length < 0) throw DomainError("length must be >= 0");
    std::vector<std::int32_t> letters;
    letters.reserve(static_cast<std::size_t>(length));
    const std::uint64_t alphabet = 2ULL * static_cast<std::uint64_t>(n - 1);
    std::int32_t prev = 0;
    for (int i = 0; i < length; ++i) {
        std::int32_t s;
        do {
            const std::uint64_t r = rng_below(rng, alphabet);
            const std::int32_t idx = static_cast<std::int32_t>(r / 2) + 1;
            s = (r & 1) ? -idx : idx;
        } while (s == -prev && prev != 0);
        letters.push_back(s);
        prev = s;
    }
    return BraidWord(n, std::move(letters));
}

namespace {

// Random reduced word whose letters are drawn from generator indices
// [lo, hi] only (signed).
BraidWord random_word_over_range(int n, int lo, int hi, int length, Rng& rng) {
    const std::uint64_t alphabet = 2ULL * static_cast<std::uint64_t>(hi - lo + 1);
    std::vector<std::int32_t> letters;
    letters.reserve(static_cast<std::size_t>(length));
    std::int32_t prev = 0;
    for (int i = 0; i < length; ++i) {
        std::int32_t s;
        do {
            const std::uint64_t r = rng_below(rng, alphabet);
            const std::int32_t idx = lo + static_cast<std::int32_t>(r / 2);
            s = (r & 1) ? -idx : idx;
        } while (s == -prev && prev != 0);
        letters.push_back(s);
        prev = s;
    }
    return BraidWord(n, std::move(letters));
}

BraidWord conjugate(const BraidWord& z, const BraidWord& u) {
    return multiply(multiply(z, u), invert_word(z));
}

}  // namespace

CommutingPair generate_commuting_pair(const SamplerConfig& cfg, Side side, Rng& rng) {
    cfg.validate();
    if (cfg.n < 4) throw DomainError("commuting-pair construction needs n >= 4");
    // Lower block x_1..x_{n/2-1}, upper block x_{n/2+1}..x_{n-1}; the index
    // n/2 is skipped so the blocks commute elementwise.
    const int mid = cfg.n / 2;
    const int priv_lo = side == Side::LeftHalf ? 1 : mid + 1;
    const int priv_hi = side == Side::LeftHalf ? mid - 1 : cfg.n - 1;
    const int gens_lo = side == Side::LeftHalf ? mid + 1 : 1;
    const int gens_hi = side == Side::LeftHalf ? cfg.n - 1 : mid - 1;

    const BraidWord z = random_word(cfg.n, cfg.conj_len, rng);
    const BraidWord u = random_word_over_range(cfg.n, priv_lo, priv_hi, cfg.l, rng);
    CommutingPair pair{conjugate(z, u), {}, z};
    pair.subgroup_gens.reserve(static_cast<std::size_t>(cfg.gen_count));
    for (int j = 0; j < cfg.gen_count; ++j) {
        const BraidWord v = random_word_over_range(cfg.n, gens_lo, gens_hi, cfg.gen_len, rng);
        pair.subgroup_gens.push_back(conjugate(z, v));
    }
    return pair;
}

BraidWord sample_subgroup_element(const std::vector<BraidWord>& gens, int factor_budget, Rng& rng) {
    if (gens.empty()) throw DomainError("empty generator list");
    if (factor_budget < 1) throw DomainError("factor_budget must be >= 1");
    BraidWord out = BraidWord::identity(gens.front().strands());
    for (int i = 0; i < factor_budget; ++i) {
        const std::uint64_t r = rng_below(rng, 2ULL * gens.size());
        const BraidWord& g = gens[static_cast<std::size_t>(r / 2)];
        out = multiply(out, (r & 1) ? invert_word(g) : g);
    }
    return out;
}

}  // namespace braidkex
