#include <doctest.h>

#include "braidkex/braid_word.hpp"
#include "braidkex/canonical_form.hpp"
#include "braidkex/errors.hpp"
#include "braidkex/keygen.hpp"
#include "test_util.hpp"

using namespace braidkex;

namespace {

BraidWord w(int n, std::vector<std::int32_t> letters) { return BraidWord(n, std::move(letters)); }

Permutation perm(std::vector<std::uint8_t> image) { return Permutation(std::move(image)); }

}  // namespace

TEST_CASE("parse_word follows the grammar") {
    CHECK(parse_word("1 2 1", 3).letters() == std::vector<std::int32_t>{1, 2, 1});
    CHECK(parse_word("1 -1", 3).empty());
    CHECK(parse_word("", 3).empty());
    CHECK(parse_word("  -2\t1\n", 3).letters() == std::vector<std::int32_t>{-2, 1});
    CHECK_THROWS_AS(parse_word("5", 4), ParseError);
    CHECK_THROWS_AS(parse_word("0", 4), ParseError);
    CHECK_THROWS_AS(parse_word("x1", 4), ParseError);
    CHECK_THROWS_AS(parse_word("+2", 4), ParseError);
    CHECK_THROWS_AS(parse_word("1 -", 4), ParseError);
}

TEST_CASE("format_word inverts parse_word") {
    const BraidWord u = parse_word("1 -2 3 -1", 5);
    CHECK(parse_word(format_word(u), 5) == u);
}

TEST_CASE("BraidWord construction validates and reduces") {
    CHECK(w(3, {1, -1, 2}).letters() == std::vector<std::int32_t>{2});
    CHECK(w(3, {1, 2, -2, -1}).empty());
    CHECK_THROWS_AS(w(3, {3}), DomainError);
    CHECK_THROWS_AS(w(3, {0}), DomainError);
    CHECK_THROWS_AS(BraidWord(1, {}), DomainError);
    CHECK_THROWS_AS(BraidWord(256, {}), DomainError);
    CHECK_NOTHROW(BraidWord(2, {1, 1, 1}));
}

TEST_CASE("multiply concatenates and reduces") {
    CHECK(multiply(w(3, {1}), w(3, {-1})).empty());
    CHECK(multiply(w(3, {1}), w(3, {2})).letters() == std::vector<std::int32_t>{1, 2});
    CHECK(multiply(w(3, {1, 2}), w(3, {-2, -1})).empty());
    CHECK_THROWS_AS(multiply(w(3, {1}), w(4, {1})), DomainError);
}

TEST_CASE("invert_word reverses and negates") {
    CHECK(invert_word(w(3, {1, 2})).letters() == std::vector<std::int32_t>{-2, -1});
    CHECK(invert_word(BraidWord::identity(3)).empty());
    CHECK(invert_word(w(3, {1, -2, 1})).letters() == std::vector<std::int32_t>{-1, 2, -1});
}

TEST_CASE("permutation_of projects with the left-first convention") {
    CHECK(permutation_of(w(3, {1})) == perm({1, 0, 2}));
    CHECK(permutation_of(w(3, {-1})) == perm({1, 0, 2}));
    CHECK(permutation_of(BraidWord::identity(3)).is_identity());
    // x1 then x2: strand 0 ends at 2, strand 1 at 0, strand 2 at 1.
    CHECK(permutation_of(w(3, {1, 2})) == perm({2, 0, 1}));
    CHECK(cycle_type(permutation_of(w(3, {1, 2}))) == std::vector<int>{3});
}

TEST_CASE("permutation_of is a homomorphism") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng_below(rng, 6));
        const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 30)), rng);
        const BraidWord v = random_word(n, static_cast<int>(rng_below(rng, 30)), rng);
        CHECK(permutation_of(multiply(u, v)) == permutation_of(u).then(permutation_of(v)));
    }
}

TEST_CASE("delta_word") {
    CHECK(delta_word(2).letters() == std::vector<std::int32_t>{1});
    CHECK(delta_word(3).letters() == std::vector<std::int32_t>{1, 2, 1});
    const BraidWord d4 = delta_word(4);
    CHECK(d4.length() == 6);
    CHECK(permutation_of(d4) == Permutation::delta(4));
    for (int n = 2; n <= 9; ++n) CHECK(permutation_of(delta_word(n)) == Permutation::delta(n));
}

TEST_CASE("to_canonical on the pinned examples") {
    const CanonicalForm x1 = to_canonical(w(3, {1}));
    CHECK(x1.delta_power == 0);
    REQUIRE(x1.factors.size() == 1);
    CHECK(x1.factors[0] == perm({1, 0, 2}));

    const CanonicalForm d3 = to_canonical(w(3, {1, 2, 1}));
    CHECK(d3.delta_power == 1);
    CHECK(d3.factors.empty());

    // Delta . x1^-1 = x1 x2, so x1^-1 = Delta^-1 . (factor of x1 x2).
    const CanonicalForm x1_inv = to_canonical(w(3, {-1}));
    CHECK(x1_inv.delta_power == -1);
    REQUIRE(x1_inv.factors.size() == 1);
    CHECK(x1_inv.factors[0] == perm({2, 0, 1}));
    CHECK(x1_inv.factors[0] == permutation_of(w(3, {1, 2})));

    CHECK(to_canonical(BraidWord::identity(3)) == identity_form(3));
}

TEST_CASE("to_canonical in B_2 gives pure delta powers") {
    CHECK(to_canonical(w(2, {1, 1, 1})).delta_power == 3);
    CHECK(to_canonical(w(2, {1, 1, 1})).factors.empty());
    CHECK(to_canonical(w(2, {-1, -1})).delta_power == -2);
    CHECK(equals(w(2, {1, 1}), w(2, {1, 1})));
    CHECK_FALSE(equals(w(2, {1}), w(2, {1, 1})));
}

TEST_CASE("equals decides the word problem via the defining relations") {
    CHECK(equals(w(3, {1, 2, 1}), w(3, {2, 1, 2})));
    CHECK(equals(w(5, {1, 3}), w(5, {3, 1})));
    CHECK_FALSE(equals(w(3, {1}), w(3, {2})));
    CHECK_THROWS_AS(equals(w(3, {1}), w(4, {1})), DomainError);
}

TEST_CASE("normal form is invariant under relator rewriting") {
    Rng rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng_below(rng, 6));
        const int len = static_cast<int>(rng_below(rng, 65));
        const BraidWord u = random_word(n, len, rng);
        const BraidWord v = braidkex::testutil::rewrite_with_relators(u, 50, rng);
        CHECK(to_canonical(u) == to_canonical(v));
    }
}

TEST_CASE("emitted forms are valid and left-weighted") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 80)), rng);
        CHECK(is_valid_canonical(to_canonical(u)));
    }
}

TEST_CASE("canonical_to_word round-trips") {
    CHECK(canonical_to_word(identity_form(3)).empty());
    CanonicalForm pure_delta = identity_form(3);
    pure_delta.delta_power = 1;
    CHECK(canonical_to_word(pure_delta).letters() == std::vector<std::int32_t>{1, 2, 1});

    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const CanonicalForm f = to_canonical(random_word(n, static_cast<int>(rng_below(rng, 64)), rng));
        CHECK(to_canonical(canonical_to_word(f)) == f);
    }
}

TEST_CASE("canonical_multiply matches word multiplication") {
    const CanonicalForm f = to_canonical(w(4, {1, -2, 3, 3}));
    CHECK(canonical_multiply(f, identity_form(4)) == f);
    CHECK(canonical_multiply(identity_form(4), f) == f);
    CHECK(canonical_multiply(f, canonical_invert(f)) == identity_form(4));
    CHECK_THROWS_AS(canonical_multiply(f, identity_form(5)), DomainError);

    Rng rng(19);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 48)), rng);
        const BraidWord v = random_word(n, static_cast<int>(rng_below(rng, 48)), rng);
        CHECK(canonical_multiply(to_canonical(u), to_canonical(v)) == to_canonical(multiply(u, v)));
    }
}

TEST_CASE("canonical_invert") {
    CHECK(canonical_invert(identity_form(3)) == identity_form(3));
    const CanonicalForm x1 = to_canonical(w(3, {1}));
    CHECK(canonical_invert(x1) == to_canonical(w(3, {-1})));

    Rng rng(23);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const CanonicalForm f = to_canonical(random_word(n, static_cast<int>(rng_below(rng, 48)), rng));
        CHECK(canonical_invert(canonical_invert(f)) == f);
        CHECK(canonical_multiply(f, canonical_invert(f)) == identity_form(n));
    }
}

TEST_CASE("inversion collapses to the identity form") {
    Rng rng(29);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 64)), rng);
        CHECK(to_canonical(multiply(u, invert_word(u))) == identity_form(n));
    }
}

TEST_CASE("delta squared is central and delta conjugation flips indices") {
    Rng rng(31);
    for (int n = 3; n <= 8; ++n) {
        const BraidWord d = delta_word(n);
        const BraidWord d2 = multiply(d, d);
        for (int trial = 0; trial < 25; ++trial) {
            const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 40)), rng);
            CHECK(equals(multiply(d2, u), multiply(u, d2)));
        }
        for (int g = 1; g < n; ++g) {
            const BraidWord conj = multiply(multiply(d, w(n, {g})), invert_word(d));
            CHECK(equals(conj, w(n, {n - g})));
        }
    }
}

TEST_CASE("is_pure") {
    CHECK(is_pure(w(3, {1, 1})));
    CHECK_FALSE(is_pure(w(3, {1})));
    for (int n = 3; n <= 8; ++n) {
        const BraidWord d = delta_word(n);
        CHECK(is_pure(multiply(d, d)));
    }
}

TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation::identity(4)) == std::vector<int>{1, 1, 1, 1});
    CHECK(cycle_type(Permutation::adjacent_transposition(4, 2)) == std::vector<int>{1, 1, 2});

    Rng rng(37);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + static_cast<int>(rng_below(rng, 6));
        const Permutation rho = permutation_of(random_word(n, 20, rng));
        const Permutation sigma = permutation_of(random_word(n, 20, rng));
        const Permutation conj = sigma.inverse().then(rho).then(sigma);
        CHECK(cycle_type(conj) == cycle_type(rho));
    }
}

TEST_CASE("permutation_of agrees between words and forms") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        const BraidWord u = random_word(n, static_cast<int>(rng_below(rng, 50)), rng);
        CHECK(permutation_of(u) == permutation_of(to_canonical(u)));
    }
}

TEST_CASE("canonical_length") {
    CHECK(canonical_length(identity_form(4)) == 0);
    CHECK(canonical_length(to_canonical(w(4, {1}))) == 1);
    CHECK(canonical_length(to_canonical(w(4, {-1}))) == 1 + 3);  // Delta^-1 plus one factor
}

TEST_CASE("starting and finishing sets") {
    // x1 x2 as a factor can only start with x1 and only end with x2.
    const Permutation f = permutation_of(w(3, {1, 2}));
    CHECK(starting_set(f) == std::vector<int>{1});
    CHECK(finishing_set(f) == std::vector<int>{2});
    CHECK(starting_set(Permutation::delta(5)) == std::vector<int>{1, 2, 3, 4});
    CHECK(is_left_weighted(Permutation::delta(3), permutation_of(w(3, {1}))));
    CHECK_FALSE(is_left_weighted(permutation_of(w(3, {1})), permutation_of(w(3, {2}))));
}
