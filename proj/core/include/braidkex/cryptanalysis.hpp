#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidkex/canonical_form.hpp"
#include "braidkex/permutation.hpp"

namespace braidkex {

// A decomposition problem: find a in <left_gens>, b in <right_gens> with
// a.w.b = w1.  For the eavesdropper model the left generator list is the full
// Artin set, standing in for the concealed subgroup.
struct DecompositionInstance {
    BraidWord w;
    BraidWord w1;
    std::vector<BraidWord> left_gens;
    std::vector<BraidWord> right_gens;
};

struct RecoveredPair {
    BraidWord left;
    BraidWord right;
};

// Exhaustive search over products of up to max_left/max_right generators or
// inverses per side (depth 0 = identity), deduplicated as group elements.
// Returns the first match in depth-major order, or nothing.
std::optional<RecoveredPair> brute_force_decompose(const DecompositionInstance& inst,
                                                   int max_left_factors, int max_right_factors);

struct LengthAttackResult {
    std::optional<RecoveredPair> pair;
    int iterations = 0;
};

// Beam search over single-generator extensions of a and b, minimizing the
// canonical length of a^-1.w1.b^-1; succeeds when that residue equals w.
LengthAttackResult length_attack(const DecompositionInstance& inst, int beam_width, int max_iters);

// True iff the pair reproduces w1 and its left element commutes with the
// peer's key on the published-subgroup side, which is what key recovery needs.
bool check_equivalent_pair(const DecompositionInstance& inst, const RecoveredPair& pair,
                           const BraidWord& peer_private);

// The projection of w^-1.P_B; non-trivial whenever w^-1.P_B is not pure.
Permutation rho_of(const BraidWord& w, const CanonicalForm& p_b);

struct DistinguisherVerdict {
    Permutation rho_b;
    Permutation candidate_residue;
    bool consistent = false;
};

// Necessary condition on a claimed shared key: stripping pi(P_A) from the
// candidate's projection must leave a permutation with the cycle type of
// rho_B.  A genuine key always passes.
DistinguisherVerdict distinguisher(const BraidWord& w, const CanonicalForm& p_a,
                                   const CanonicalForm& p_b, const CanonicalForm& candidate);

struct DistinguisherSummary {
    int trials = 0;
    int true_key_accepted = 0;
    int random_rejected = 0;
    int pure_rho_b = 0;
    double true_key_acceptance = 0.0;
    double random_candidate_rejection = 0.0;
    double pure_braid_incidence = 0.0;
    bool degenerate_all_pure = false;

    // Line-oriented key=value text for harness parsing.
    std::string format() const;
};

// Runs `trials` seeded handshakes at (n, l); checks the true key and one
// random a.w.b candidate per trial.
DistinguisherSummary distinguisher_experiment(int n, int l, int trials, std::uint64_t seed);

}  // namespace braidkex
