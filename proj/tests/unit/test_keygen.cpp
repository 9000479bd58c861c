#include <doctest.h>

#include <algorithm>

#include "braidkex/canonical_form.hpp"
#include "braidkex/errors.hpp"
#include "braidkex/keygen.hpp"

using namespace braidkex;

namespace {

bool commutes(const BraidWord& a, const BraidWord& b) {
    return equals(multiply(a, b), multiply(b, a));
}

// Generator indices used by a word.
std::pair<int, int> support(const BraidWord& u) {
    int lo = 1 << 20, hi = 0;
    for (std::int32_t s : u.letters()) {
        const int g = s < 0 ? -s : s;
        lo = std::min(lo, g);
        hi = std::max(hi, g);
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("random_word basics") {
    Rng rng(1);
    CHECK(random_word(3, 0, rng).empty());
    for (int trial = 0; trial < 50; ++trial) {
        const BraidWord u = random_word(3, 1, rng);
        REQUIRE(u.length() == 1);
        const std::int32_t s = u.letters()[0];
        CHECK((s == 1 || s == -1 || s == 2 || s == -2));
    }
}

TEST_CASE("random_word has exact length (no immediate cancellation)") {
    Rng rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 10));
        const int len = static_cast<int>(rng_below(rng, 200));
        CHECK(random_word(n, len, rng).length() == static_cast<std::size_t>(len));
    }
}

TEST_CASE("random_word is deterministic per seed") {
    Rng a(99), b(99);
    CHECK(random_word(8, 64, a) == random_word(8, 64, b));
    Rng c(100);
    CHECK(random_word(8, 64, a) != random_word(8, 64, c));  // overwhelmingly
}

TEST_CASE("generate_commuting_pair: commutation holds for every generator") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        SamplerConfig cfg = SamplerConfig::defaults(4 + static_cast<int>(seed % 5), 8, seed);
        const Side side = (seed & 1) ? Side::RightHalf : Side::LeftHalf;
        const CommutingPair pair = generate_commuting_pair(cfg, side, rng);
        REQUIRE_FALSE(pair.subgroup_gens.empty());
        for (const BraidWord& g : pair.subgroup_gens) CHECK(commutes(pair.private_elem, g));
    }
}

TEST_CASE("generate_commuting_pair: stripped supports live on disjoint halves") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const int n = 8;
        SamplerConfig cfg = SamplerConfig::defaults(n, 16, seed);
        const CommutingPair pair = generate_commuting_pair(cfg, Side::LeftHalf, rng);
        const BraidWord z_inv = invert_word(pair.conjugator);
        const BraidWord u = multiply(multiply(z_inv, pair.private_elem), pair.conjugator);
        const auto [u_lo, u_hi] = support(u);
        CHECK(u_lo >= 1);
        CHECK(u_hi <= n / 2 - 1);
        for (const BraidWord& g : pair.subgroup_gens) {
            const BraidWord v = multiply(multiply(z_inv, g), pair.conjugator);
            const auto [v_lo, v_hi] = support(v);
            CHECK(v_lo >= n / 2 + 1);
            CHECK(v_hi <= n - 1);
            CHECK(v_lo - u_hi >= 2);  // at least one skipped index between halves
        }
    }
}

TEST_CASE("generate_commuting_pair: n=4 toy matches the far-commutation picture") {
    Rng rng(5);
    SamplerConfig cfg;
    cfg.n = 4;
    cfg.l = 3;
    cfg.gen_count = 2;
    cfg.gen_len = 2;
    cfg.conj_len = 1;
    cfg.seed = 5;
    const CommutingPair pair = generate_commuting_pair(cfg, Side::LeftHalf, rng);
    for (const BraidWord& g : pair.subgroup_gens) CHECK(commutes(pair.private_elem, g));
}

TEST_CASE("generate_commuting_pair rejects n < 4 and bad configs") {
    Rng rng(6);
    SamplerConfig cfg = SamplerConfig::defaults(3, 8, 0);
    CHECK_THROWS_AS(generate_commuting_pair(cfg, Side::LeftHalf, rng), DomainError);
    SamplerConfig bad = SamplerConfig::defaults(8, 8, 0);
    bad.gen_count = 1;
    CHECK_THROWS_AS(generate_commuting_pair(bad, Side::LeftHalf, rng), DomainError);
    bad = SamplerConfig::defaults(8, 8, 0);
    bad.l = 0;
    CHECK_THROWS_AS(generate_commuting_pair(bad, Side::LeftHalf, rng), DomainError);
}

TEST_CASE("cross-party commutation: left and right halves commute pairwise") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng_a(split_seed(seed, 1)), rng_b(split_seed(seed, 2));
        SamplerConfig cfg = SamplerConfig::defaults(8, 12, seed);
        const CommutingPair alice = generate_commuting_pair(cfg, Side::LeftHalf, rng_a);
        const CommutingPair bob = generate_commuting_pair(cfg, Side::RightHalf, rng_b);
        // a2 drawn from Bob's published subgroup commutes with Bob's private element.
        Rng rng_s(split_seed(seed, 3));
        const BraidWord a2 = sample_subgroup_element(bob.subgroup_gens, 4, rng_s);
        CHECK(commutes(a2, bob.private_elem));
        // b1 drawn from Alice's published subgroup commutes with Alice's private element.
        const BraidWord b1 = sample_subgroup_element(alice.subgroup_gens, 4, rng_s);
        CHECK(commutes(b1, alice.private_elem));
    }
}

TEST_CASE("sample_subgroup_element") {
    Rng rng(7);
    const std::vector<BraidWord> gens = {BraidWord(4, {1, 2})};
    const BraidWord s = sample_subgroup_element(gens, 1, rng);
    CHECK((s == gens[0] || s == invert_word(gens[0])));
    CHECK_THROWS_AS(sample_subgroup_element({}, 1, rng), DomainError);
    CHECK_THROWS_AS(sample_subgroup_element(gens, 0, rng), DomainError);

    Rng a(11), b(11);
    const std::vector<BraidWord> more = {BraidWord(6, {1, -2}), BraidWord(6, {4}), BraidWord(6, {5, 5})};
    CHECK(sample_subgroup_element(more, 10, a) == sample_subgroup_element(more, 10, b));
}

TEST_CASE("identical SamplerConfig yields identical material") {
    SamplerConfig cfg = SamplerConfig::defaults(8, 16, 77);
    Rng r1(cfg.seed), r2(cfg.seed);
    const CommutingPair p1 = generate_commuting_pair(cfg, Side::LeftHalf, r1);
    const CommutingPair p2 = generate_commuting_pair(cfg, Side::LeftHalf, r2);
    CHECK(p1.private_elem == p2.private_elem);
    CHECK(p1.subgroup_gens == p2.subgroup_gens);
    CHECK(p1.conjugator == p2.conjugator);
}
