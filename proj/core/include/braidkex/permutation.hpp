#pragma once

#include <cstdint>
#include <vector>

namespace braidkex {

// An element of the symmetric group S_n on strand positions {0, ..., n-1}.
//
// Composition convention, used consistently everywhere in this library:
// words act left letter first, so the image of a braid word u.v is
// permutation_of(u).then(permutation_of(v)).  `then` applies *this first
// and `after` second.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint8_t> image);

    static Permutation identity(int n);
    // Swaps positions g-1 and g (generator index g in 1..n-1).
    static Permutation adjacent_transposition(int n, int g);
    // The half-twist permutation i -> n-1-i.
    static Permutation delta(int n);

    int size() const { return static_cast<int>(image_.size()); }
    std::uint8_t operator[](int i) const { return image_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& image() const { return image_; }

    bool is_identity() const;

    // Apply *this first, then `after`.
    Permutation then(const Permutation& after) const;
    Permutation inverse() const;
    // Conjugation by the half-twist: i -> n-1 - (*this)[n-1-i].
    Permutation flipped() const;

    bool operator==(const Permutation&) const = default;

private:
    std::vector<std::uint8_t> image_;
};

// Multiset of cycle lengths, fixed points included, sorted ascending.
std::vector<int> cycle_type(const Permutation& p);

}  // namespace braidkex
