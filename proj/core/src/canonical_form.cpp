#include "braidkex/canonical_form.hpp"

#include <algorithm>
#include <cstring>
#include <deque>

#include "braidkex/errors.hpp"

// Garside left canonical form over permutation-braid factors.
//
// A factor is stored as its permutation table t (t[i] = final position of the
// strand starting at i).  Key facts driving the algorithm:
//   - generator g left-divides a factor  iff t[g-1] > t[g]        (starting set)
//   - generator g right-divides a factor iff t'[g-1] > t'[g], t' = t^-1
//   - a pair (A, B) is left-weighted iff every g in S(B) is in F(A); if some
//     g violates this, the crossing can be moved: A <- A.x_g, B <- x_g^-1.B,
//     and A.x_g is still a permutation braid precisely because g was not in
//     F(A).  Repeating until no mover exists yields the left-weighted pair.
// Local pair weighting is confluent, so processing a worklist of possibly
// unweighted adjacent pairs until it drains produces the unique form.

namespace braidkex {

namespace {

bool table_is_identity(const std::uint8_t* t, int n) {
    for (int i = 0; i < n; ++i)
        if (t[i] != i) return false;
    return true;
}

bool table_is_delta(const std::uint8_t* t, int n) {
    for (int i = 0; i < n; ++i)
        if (t[i] != n - 1 - i) return false;
    return true;
}

void table_flip(const std::uint8_t* t, std::uint8_t* out, int n) {
    for (int i = 0; i < n; ++i)
        out[i] = static_cast<std::uint8_t>(n - 1 - t[n - 1 - i]);
}

// Moves crossings from the head of b into the tail of a until the pair is
// left-weighted.  Returns true if anything moved.
bool weight_pair(std::uint8_t* a, std::uint8_t* b, int n, std::uint8_t* inv_a,
                 std::uint8_t* pending, std::vector<int>& stack) {
    for (int i = 0; i < n; ++i) inv_a[a[i]] = static_cast<std::uint8_t>(i);
    stack.clear();
    for (int g = 1; g < n; ++g) {
        stack.push_back(g);
        pending[g] = 1;
    }
    bool changed = false;
    while (!stack.empty()) {
        const int g = stack.back();
        stack.pop_back();
        pending[g] = 0;
        // g in S(b) and g not in F(a)?
        if (b[g - 1] > b[g] && inv_a[g - 1] <= inv_a[g]) {
            std::swap(b[g - 1], b[g]);
            const std::uint8_t i1 = inv_a[g - 1];
            const std::uint8_t i2 = inv_a[g];
            std::swap(a[i1], a[i2]);
            std::swap(inv_a[g - 1], inv_a[g]);
            changed = true;
            // Only memberships at g-1, g, g+1 can have changed.
            for (int h = g - 1; h <= g + 1; ++h) {
                if (h >= 1 && h < n && !pending[h]) {
                    stack.push_back(h);
                    pending[h] = 1;
                }
            }
        }
    }
    return changed;
}

// Doubly-linked sequence of factor tables with a dirty-pair worklist.
class FactorChain {
public:
    explicit FactorChain(int n) : n_(n), scratch_inv_(static_cast<std::size_t>(n)),
                                  scratch_pending_(static_cast<std::size_t>(n), 0) {}

    int size() const { return count_; }
    int head() const { return head_; }
    int tail() const { return tail_; }
    int next(int s) const { return next_[static_cast<std::size_t>(s)]; }
    std::uint8_t* table(int s) { return tables_.data() + static_cast<std::size_t>(s) * n_; }
    const std::uint8_t* table(int s) const { return tables_.data() + static_cast<std::size_t>(s) * n_; }

    // Appends a factor table at the tail; neutral and Delta tables are the
    // caller's business.
    int append(const std::uint8_t* t) {
        const int s = static_cast<int>(next_.size());
        tables_.insert(tables_.end(), t, t + n_);
        next_.push_back(-1);
        prev_.push_back(tail_);
        in_dirty_.push_back(0);
        alive_.push_back(1);
        if (tail_ >= 0)
            next_[static_cast<std::size_t>(tail_)] = s;
        else
            head_ = s;
        tail_ = s;
        ++count_;
        return s;
    }

    void reserve(std::size_t factors) {
        tables_.reserve(factors * static_cast<std::size_t>(n_));
        next_.reserve(factors);
        prev_.reserve(factors);
        in_dirty_.reserve(factors);
        alive_.reserve(factors);
    }

    // Marks the pair (s, next(s)) as possibly unweighted.
    void mark(int s) {
        if (s < 0 || !alive_[static_cast<std::size_t>(s)]) return;
        if (in_dirty_[static_cast<std::size_t>(s)]) return;
        in_dirty_[static_cast<std::size_t>(s)] = 1;
        dirty_.push_back(s);
    }

    void mark_all_pairs() {
        for (int s = head_; s >= 0; s = next_[static_cast<std::size_t>(s)]) mark(s);
    }

    void unlink(int s) {
        const int p = prev_[static_cast<std::size_t>(s)];
        const int q = next_[static_cast<std::size_t>(s)];
        if (p >= 0) next_[static_cast<std::size_t>(p)] = q; else head_ = q;
        if (q >= 0) prev_[static_cast<std::size_t>(q)] = p; else tail_ = p;
        alive_[static_cast<std::size_t>(s)] = 0;
        --count_;
    }

    // Drains the worklist, then folds leading Delta factors into delta_power
    // and drops trailing identities.
    void settle(std::int32_t& delta_power) {
        while (!dirty_.empty()) {
            const int s = dirty_.front();
            dirty_.pop_front();
            in_dirty_[static_cast<std::size_t>(s)] = 0;
            if (!alive_[static_cast<std::size_t>(s)]) continue;
            const int t = next_[static_cast<std::size_t>(s)];
            if (t < 0) continue;
            if (!weight_pair(table(s), table(t), n_, scratch_inv_.data(),
                             scratch_pending_.data(), scratch_stack_))
                continue;
            mark(prev_[static_cast<std::size_t>(s)]);
            if (table_is_identity(table(t), n_)) {
                unlink(t);
                mark(s);
            } else {
                mark(t);
            }
        }
        while (head_ >= 0 && table_is_delta(table(head_), n_)) {
            ++delta_power;
            unlink(head_);
        }
        while (tail_ >= 0 && table_is_identity(table(tail_), n_)) unlink(tail_);
    }

    CanonicalForm extract(std::int32_t delta_power) const {
        CanonicalForm f;
        f.n = n_;
        f.delta_power = delta_power;
        f.factors.reserve(static_cast<std::size_t>(count_));
        for (int s = head_; s >= 0; s = next_[static_cast<std::size_t>(s)])
            f.factors.emplace_back(std::vector<std::uint8_t>(table(s), table(s) + n_));
        return f;
    }

private:
    int n_;
    std::vector<std::uint8_t> tables_;
    std::vector<int> next_, prev_;
    std::vector<std::uint8_t> in_dirty_, alive_;
    int head_ = -1, tail_ = -1, count_ = 0;
    std::deque<int> dirty_;
    std::vector<std::uint8_t> scratch_inv_, scratch_pending_;
    std::vector<int> scratch_stack_;
};

// Appends the factor for one letter.  `flip` says whether an odd number of
// Delta^-1 from later inverse letters will pass over this factor.
// A positive letter contributes the transposition; an inverse letter
// contributes Delta^-1 times the permutation braid (Delta . x_g^-1).
void append_letter_factor(FactorChain& chain, std::int32_t& delta_power, int n, std::int32_t letter,
                          bool flip, std::vector<std::uint8_t>& buf) {
    int g = letter < 0 ? -letter : letter;
    if (flip) g = n - g;
    buf.resize(static_cast<std::size_t>(n));
    if (letter > 0) {
        for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
        std::swap(buf[static_cast<std::size_t>(g - 1)], buf[static_cast<std::size_t>(g)]);
    } else {
        // Table of Delta . x_g^-1: order reversal with the crossing at (g-1, g) undone.
        for (int i = 0; i < n; ++i) {
            int v = n - 1 - i;
            if (v == g - 1)
                v = g;
            else if (v == g)
                v = g - 1;
            buf[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
        }
    }
    if (table_is_identity(buf.data(), n)) return;       // only at n=2 (inverse letter)
    if (table_is_delta(buf.data(), n)) {                // only at n=2 (positive letter)
        ++delta_power;
        return;
    }
    chain.append(buf.data());
}

CanonicalForm canonical_of_letters(int n, const std::int32_t* letters, std::size_t len) {
    std::int32_t delta_power = 0;
    FactorChain chain(n);
    chain.reserve(len);
    std::size_t negatives = 0;
    for (std::size_t i = 0; i < len; ++i)
        if (letters[i] < 0) ++negatives;
    delta_power -= static_cast<std::int32_t>(negatives);
    std::vector<std::uint8_t> buf;
    std::size_t negs_seen = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (letters[i] < 0) ++negs_seen;
        const std::size_t negs_after = negatives - negs_seen;
        append_letter_factor(chain, delta_power, n, letters[i], (negs_after & 1) != 0, buf);
    }
    chain.mark_all_pairs();
    chain.settle(delta_power);
    return chain.extract(delta_power);
}

// Loads f's factors (flipped when flip_parity is odd) followed by g's factors,
// seeds the worklist with the junction pair only, and settles.
CanonicalForm merge_forms(const CanonicalForm& f, const CanonicalForm& g) {
    const int n = f.n;
    std::int32_t delta_power = f.delta_power + g.delta_power;
    FactorChain chain(n);
    chain.reserve(f.factors.size() + g.factors.size());
    const bool flip = (g.delta_power & 1) != 0;
    std::vector<std::uint8_t> buf(static_cast<std::size_t>(n));
    for (const Permutation& a : f.factors) {
        if (flip) {
            table_flip(a.image().data(), buf.data(), n);
            chain.append(buf.data());
        } else {
            chain.append(a.image().data());
        }
    }
    const int junction = chain.tail();
    for (const Permutation& b : g.factors) chain.append(b.image().data());
    if (junction >= 0) chain.mark(junction);
    chain.settle(delta_power);
    return chain.extract(delta_power);
}

constexpr std::size_t kDirectBlock = 192;

CanonicalForm canonical_recursive(int n, const std::int32_t* letters, std::size_t len) {
    if (len <= kDirectBlock) return canonical_of_letters(n, letters, len);
    const std::size_t half = len / 2;
    return merge_forms(canonical_recursive(n, letters, half),
                       canonical_recursive(n, letters + half, len - half));
}

}  // namespace

CanonicalForm identity_form(int n) {
    BraidParams params(n);
    CanonicalForm f;
    f.n = params.n;
    return f;
}

std::vector<int> starting_set(const Permutation& factor) {
    std::vector<int> out;
    for (int g = 1; g < factor.size(); ++g)
        if (factor[g - 1] > factor[g]) out.push_back(g);
    return out;
}

std::vector<int> finishing_set(const Permutation& factor) {
    const Permutation inv = factor.inverse();
    std::vector<int> out;
    for (int g = 1; g < factor.size(); ++g)
        if (inv[g - 1] > inv[g]) out.push_back(g);
    return out;
}

bool is_left_weighted(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw DomainError("strand-count mismatch");
    const int n = a.size();
    const Permutation inv = a.inverse();
    for (int g = 1; g < n; ++g)
        if (b[g - 1] > b[g] && inv[g - 1] <= inv[g]) return false;
    return true;
}

bool is_valid_canonical(const CanonicalForm& f) {
    if (f.n < 2 || f.n > kMaxStrands) return false;
    const Permutation id = Permutation::identity(f.n);
    const Permutation delta = Permutation::delta(f.n);
    for (const Permutation& a : f.factors) {
        if (a.size() != f.n) return false;
        if (a == id || a == delta) return false;
    }
    for (std::size_t i = 0; i + 1 < f.factors.size(); ++i)
        if (!is_left_weighted(f.factors[i], f.factors[i + 1])) return false;
    return true;
}

CanonicalForm to_canonical(const BraidWord& u) {
    return canonical_recursive(u.strands(), u.letters().data(), u.letters().size());
}

BraidWord canonical_to_word(const CanonicalForm& f) {
    std::vector<std::int32_t> letters;
    const BraidWord delta = delta_word(f.n);
    if (f.delta_power >= 0) {
        for (std::int32_t r = 0; r < f.delta_power; ++r)
            letters.insert(letters.end(), delta.letters().begin(), delta.letters().end());
    } else {
        const BraidWord delta_inv = invert_word(delta);
        for (std::int32_t r = 0; r < -f.delta_power; ++r)
            letters.insert(letters.end(), delta_inv.letters().begin(), delta_inv.letters().end());
    }
    // Each factor expands by bubble-sorting its table into the identity;
    // every swap emits one positive crossing and each pair swaps at most once.
    std::vector<std::uint8_t> work;
    for (const Permutation& a : f.factors) {
        work.assign(a.image().begin(), a.image().end());
        bool moved = true;
        while (moved) {
            moved = false;
            for (int q = 0; q + 1 < f.n; ++q) {
                if (work[static_cast<std::size_t>(q)] > work[static_cast<std::size_t>(q + 1)]) {
                    std::swap(work[static_cast<std::size_t>(q)], work[static_cast<std::size_t>(q + 1)]);
                    letters.push_back(q + 1);
                    moved = true;
                }
            }
        }
    }
    return BraidWord(f.n, std::move(letters));
}

CanonicalForm canonical_multiply(const CanonicalForm& f, const CanonicalForm& g) {
    if (f.n != g.n) throw DomainError("strand-count mismatch");
    return merge_forms(f, g);
}

CanonicalForm canonical_invert(const CanonicalForm& f) {
    const int n = f.n;
    const std::size_t k = f.factors.size();
    std::int32_t delta_power = -f.delta_power - static_cast<std::int32_t>(k);
    FactorChain chain(n);
    chain.reserve(k);
    std::vector<std::uint8_t> comp(static_cast<std::size_t>(n)), buf(static_cast<std::size_t>(n));
    // Inverse of Delta^p A_1..A_k is Delta^(-p-k) C_1..C_k with
    // C_i = flip^(p+k-i) of (Delta . A_{k+1-i}^-1); the sequence then re-weights.
    for (std::size_t i = 1; i <= k; ++i) {
        const Permutation inv = f.factors[k - i].inverse();
        for (int j = 0; j < n; ++j) comp[static_cast<std::size_t>(j)] = inv[n - 1 - j];
        const std::int64_t flips = f.delta_power + static_cast<std::int64_t>(k) - static_cast<std::int64_t>(i);
        if (flips & 1) {
            table_flip(comp.data(), buf.data(), n);
            chain.append(buf.data());
        } else {
            chain.append(comp.data());
        }
    }
    chain.mark_all_pairs();
    chain.settle(delta_power);
    return chain.extract(delta_power);
}

Permutation permutation_of(const CanonicalForm& f) {
    Permutation p = (f.delta_power & 1) ? Permutation::delta(f.n) : Permutation::identity(f.n);
    for (const Permutation& a : f.factors) p = p.then(a);
    return p;
}

std::int64_t canonical_length(const CanonicalForm& f) {
    const std::int64_t p = f.delta_power < 0 ? -static_cast<std::int64_t>(f.delta_power)
                                             : static_cast<std::int64_t>(f.delta_power);
    return static_cast<std::int64_t>(f.factors.size()) + p * (f.n - 1);
}

bool equals(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands()) throw DomainError("strand-count mismatch");
    return to_canonical(u) == to_canonical(v);
}

}  // namespace braidkex
