#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "braidkex/permutation.hpp"

namespace braidkex {

// Wire-format factor tables store one byte per strand, so the whole library
// works with 2 <= n <= 255.
inline constexpr int kMaxStrands = 255;

// Strand count for the braid group B_n.  Generator indices range over 1..n-1.
struct BraidParams {
    explicit BraidParams(int strands);
    int n;
};

// A freely reduced word over the signed Artin generators of B_n.
// Letter i > 0 means x_i, letter i < 0 means x_|i| inverse.  Free reduction
// (no adjacent i, -i) is maintained by every constructor.
class BraidWord {
public:
    BraidWord(int n, std::vector<std::int32_t> letters);
    static BraidWord identity(int n);

    int strands() const { return n_; }
    const std::vector<std::int32_t>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord&) const = default;

private:
    int n_;
    std::vector<std::int32_t> letters_;
};

// Word grammar: whitespace-separated tokens, each an optional '-' followed by
// a decimal integer in 1..n-1.  Empty input is the identity.
BraidWord parse_word(std::string_view text, int n);
std::string format_word(const BraidWord& w);

BraidWord multiply(const BraidWord& u, const BraidWord& v);
BraidWord invert_word(const BraidWord& u);

// The natural projection B_n -> S_n; x_i and its inverse both map to the
// transposition of positions i-1, i.
Permutation permutation_of(const BraidWord& u);

// The positive half-twist word (x_1 x_2 ... x_{n-1})(x_1 ... x_{n-2})...(x_1).
BraidWord delta_word(int n);

bool is_pure(const BraidWord& u);

}  // namespace braidkex
