#pragma once

#include <cstdint>
#include <vector>

#include "braidkex/braid_word.hpp"
#include "braidkex/permutation.hpp"

namespace braidkex {

// Garside left canonical form  Delta^p A_1 ... A_k.
//
// Every factor A_i is a permutation braid (positive braid in which each pair
// of strands crosses at most once), stored as its permutation table.
// Invariants: no factor is the identity or Delta, and every adjacent pair is
// left-weighted.  The form is unique per group element, so operator== is the
// word problem on normal forms.
struct CanonicalForm {
    int n = 0;
    std::int32_t delta_power = 0;
    std::vector<Permutation> factors;

    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm identity_form(int n);

// Generators that can start the factor: g with table[g-1] > table[g].
std::vector<int> starting_set(const Permutation& factor);
// Generators that can end the factor: g with inverse-table[g-1] > inverse-table[g].
std::vector<int> finishing_set(const Permutation& factor);
// FinishingSet(a) contains StartingSet(b).
bool is_left_weighted(const Permutation& a, const Permutation& b);

// True iff all CanonicalForm invariants hold (used by decode and tests).
bool is_valid_canonical(const CanonicalForm& f);

CanonicalForm to_canonical(const BraidWord& u);
// A word that re-normalizes to exactly the same form.
BraidWord canonical_to_word(const CanonicalForm& f);

CanonicalForm canonical_multiply(const CanonicalForm& f, const CanonicalForm& g);
CanonicalForm canonical_invert(const CanonicalForm& f);

// Projection to S_n without expanding to a word.
Permutation permutation_of(const CanonicalForm& f);

// Factor count plus |delta_power| * (n-1); the length-attack objective.
std::int64_t canonical_length(const CanonicalForm& f);

// Word problem: true iff u and v represent the same element of B_n.
bool equals(const BraidWord& u, const BraidWord& v);

}  // namespace braidkex
