#include "braidkex/cryptanalysis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "braidkex/errors.hpp"
#include "braidkex/protocol.hpp"
#include "braidkex/rng.hpp"
#include "braidkex/wire.hpp"

namespace braidkex {

namespace {

void check_instance(const DecompositionInstance& inst) {
    const int n = inst.w.strands();
    if (inst.w1.strands() != n) throw DomainError("strand-count mismatch in instance");
    for (const BraidWord& g : inst.left_gens)
        if (g.strands() != n) throw DomainError("strand-count mismatch in instance");
    for (const BraidWord& g : inst.right_gens)
        if (g.strands() != n) throw DomainError("strand-count mismatch in instance");
}

// Group elements reachable as products of at most `depth` generators or
// inverses, in depth-major discovery order, deduplicated by canonical form.
std::vector<std::pair<BraidWord, CanonicalForm>> enumerate_products(
    int n, const std::vector<BraidWord>& gens, int depth) {
    std::vector<std::pair<BraidWord, CanonicalForm>> out;
    std::set<std::vector<std::uint8_t>> seen;
    const BraidWord id = BraidWord::identity(n);
    out.emplace_back(id, to_canonical(id));
    seen.insert(wire::encode_braid(out.back().second));
    std::size_t level_begin = 0;
    for (int d = 0; d < depth; ++d) {
        const std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (const BraidWord& g : gens) {
                for (int sign = 0; sign < 2; ++sign) {
                    const BraidWord next =
                        multiply(out[i].first, sign ? invert_word(g) : g);
                    CanonicalForm form = to_canonical(next);
                    if (seen.insert(wire::encode_braid(form)).second)
                        out.emplace_back(next, std::move(form));
                }
            }
        }
        level_begin = level_end;
    }
    return out;
}

}  // namespace

std::optional<RecoveredPair> brute_force_decompose(const DecompositionInstance& inst,
                                                   int max_left_factors, int max_right_factors) {
    check_instance(inst);
    if (max_left_factors < 0 || max_right_factors < 0) throw DomainError("depths must be >= 0");
    const int n = inst.w.strands();
    const auto lefts = enumerate_products(n, inst.left_gens, max_left_factors);
    const auto rights = enumerate_products(n, inst.right_gens, max_right_factors);
    const CanonicalForm w_form = to_canonical(inst.w);
    const CanonicalForm target = to_canonical(inst.w1);
    for (const auto& [a, a_form] : lefts) {
        const CanonicalForm aw = canonical_multiply(a_form, w_form);
        for (const auto& [b, b_form] : rights) {
            if (canonical_multiply(aw, b_form) == target) return RecoveredPair{a, b};
        }
    }
    return std::nullopt;
}

namespace {

// Crossing count of the positive part plus |p| half-twists; a finer measure
// than canonical length, used only to break score ties on plateaus.
std::int64_t crossing_count(const CanonicalForm& f) {
    const std::int64_t p = f.delta_power < 0 ? -static_cast<std::int64_t>(f.delta_power)
                                             : static_cast<std::int64_t>(f.delta_power);
    std::int64_t total = p * f.n * (f.n - 1) / 2;
    for (const Permutation& a : f.factors)
        for (int i = 0; i < f.n; ++i)
            for (int j = i + 1; j < f.n; ++j)
                if (a[i] > a[j]) ++total;
    return total;
}

}  // namespace

LengthAttackResult length_attack(const DecompositionInstance& inst, int beam_width, int max_iters) {
    check_instance(inst);
    if (beam_width <= 0 || max_iters <= 0) return {};
    const int n = inst.w.strands();
    const CanonicalForm target = to_canonical(inst.w);

    struct Node {
        BraidWord a;
        BraidWord b;
        CanonicalForm residue;  // a^-1 . w1 . b^-1
        std::int64_t score;
        std::int64_t crossings;
    };

    // Pre-normalized inverse generators: extending a by g^e multiplies the
    // residue by g^-e on the left; extending b multiplies it on the right.
    std::vector<CanonicalForm> left_moves, right_moves;
    std::vector<BraidWord> left_words, right_words;
    for (const BraidWord& g : inst.left_gens) {
        for (int sign = 0; sign < 2; ++sign) {
            const BraidWord step = sign ? invert_word(g) : g;
            left_words.push_back(step);
            left_moves.push_back(to_canonical(invert_word(step)));
        }
    }
    for (const BraidWord& g : inst.right_gens) {
        for (int sign = 0; sign < 2; ++sign) {
            const BraidWord step = sign ? invert_word(g) : g;
            right_words.push_back(step);
            right_moves.push_back(to_canonical(invert_word(step)));
        }
    }

    std::vector<Node> beam;
    {
        CanonicalForm start = to_canonical(inst.w1);
        if (start == target)
            return {RecoveredPair{BraidWord::identity(n), BraidWord::identity(n)}, 0};
        beam.push_back(Node{BraidWord::identity(n), BraidWord::identity(n), start,
                            canonical_length(start), crossing_count(start)});
    }
    std::set<std::vector<std::uint8_t>> visited;
    visited.insert(wire::encode_braid(beam.front().residue));

    for (int iter = 1; iter <= max_iters; ++iter) {
        std::vector<Node> next;
        for (const Node& node : beam) {
            for (std::size_t m = 0; m < left_moves.size(); ++m) {
                CanonicalForm residue = canonical_multiply(left_moves[m], node.residue);
                if (!visited.insert(wire::encode_braid(residue)).second) continue;
                Node cand{multiply(node.a, left_words[m]), node.b, std::move(residue), 0, 0};
                cand.score = canonical_length(cand.residue);
                cand.crossings = crossing_count(cand.residue);
                if (cand.residue == target) {
                    RecoveredPair pair{cand.a, cand.b};
                    return {std::move(pair), iter};
                }
                next.push_back(std::move(cand));
            }
            for (std::size_t m = 0; m < right_moves.size(); ++m) {
                CanonicalForm residue = canonical_multiply(node.residue, right_moves[m]);
                if (!visited.insert(wire::encode_braid(residue)).second) continue;
                Node cand{node.a, multiply(right_words[m], node.b), std::move(residue), 0, 0};
                cand.score = canonical_length(cand.residue);
                cand.crossings = crossing_count(cand.residue);
                if (cand.residue == target) {
                    RecoveredPair pair{cand.a, cand.b};
                    return {std::move(pair), iter};
                }
                next.push_back(std::move(cand));
            }
        }
        if (next.empty()) return {std::nullopt, iter};
        std::stable_sort(next.begin(), next.end(), [](const Node& x, const Node& y) {
            if (x.score != y.score) return x.score < y.score;
            return x.crossings < y.crossings;
        });
        if (next.size() > static_cast<std::size_t>(beam_width))
            next.erase(next.begin() + beam_width, next.end());
        beam = std::move(next);
    }
    return {std::nullopt, max_iters};
}

bool check_equivalent_pair(const DecompositionInstance& inst, const RecoveredPair& pair,
                           const BraidWord& peer_private) {
    check_instance(inst);
    if (!equals(multiply(multiply(pair.left, inst.w), pair.right), inst.w1)) return false;
    return equals(multiply(pair.left, peer_private), multiply(peer_private, pair.left));
}

Permutation rho_of(const BraidWord& w, const CanonicalForm& p_b) {
    if (w.strands() != p_b.n) throw DomainError("strand-count mismatch");
    return permutation_of(w).inverse().then(permutation_of(p_b));
}

DistinguisherVerdict distinguisher(const BraidWord& w, const CanonicalForm& p_a,
                                   const CanonicalForm& p_b, const CanonicalForm& candidate) {
    if (w.strands() != p_a.n || p_a.n != p_b.n || p_b.n != candidate.n)
        throw DomainError("strand-count mismatch");
    DistinguisherVerdict verdict;
    verdict.rho_b = rho_of(w, p_b);
    // Strip the pi(P_A) prefix: candidate = P_A . rest implies
    // pi(rest) = pi(P_A)^-1 then pi(candidate).
    verdict.candidate_residue = permutation_of(p_a).inverse().then(permutation_of(candidate));
    verdict.consistent = cycle_type(verdict.candidate_residue) == cycle_type(verdict.rho_b);
    return verdict;
}

std::string DistinguisherSummary::format() const {
    std::ostringstream out;
    out << "trials=" << trials << '\n';
    out << "true_key_acceptance=" << true_key_acceptance << '\n';
    out << "random_candidate_rejection=" << random_candidate_rejection << '\n';
    out << "pure_braid_incidence=" << pure_braid_incidence << '\n';
    out << "degenerate_all_pure=" << (degenerate_all_pure ? 1 : 0) << '\n';
    return out.str();
}

DistinguisherSummary distinguisher_experiment(int n, int l, int trials, std::uint64_t seed) {
    if (trials < 1) throw DomainError("trials must be >= 1");
    DistinguisherSummary summary;
    summary.trials = trials;
    for (int t = 0; t < trials; ++t) {
        const HandshakeResult res = run_handshake(n, l, split_seed(seed, 1000 + static_cast<std::uint64_t>(t)));
        const auto& params = std::get<ParamsPayload>(res.transcript[0].payload);
        const auto& p_a = std::get<TransmissionPayload>(res.transcript[3].payload).braid;
        const auto& p_b = std::get<TransmissionPayload>(res.transcript[4].payload).braid;
        const BraidWord w = canonical_to_word(params.w);

        const DistinguisherVerdict on_true = distinguisher(w, p_a, p_b, res.key_a);
        if (on_true.consistent) ++summary.true_key_accepted;
        if (on_true.rho_b.is_identity()) ++summary.pure_rho_b;

        Rng rng(split_seed(seed, 5000 + static_cast<std::uint64_t>(t)));
        const BraidWord a = random_word(n, l, rng);
        const BraidWord b = random_word(n, l, rng);
        const CanonicalForm candidate = to_canonical(multiply(multiply(a, w), b));
        if (!distinguisher(w, p_a, p_b, candidate).consistent) ++summary.random_rejected;
    }
    summary.true_key_acceptance = static_cast<double>(summary.true_key_accepted) / trials;
    summary.random_candidate_rejection = static_cast<double>(summary.random_rejected) / trials;
    summary.pure_braid_incidence = static_cast<double>(summary.pure_rho_b) / trials;
    summary.degenerate_all_pure = summary.pure_rho_b == trials;
    return summary;
}

}  // namespace braidkex
