#include "braidkex/permutation.hpp"

#include <algorithm>

#include "braidkex/errors.hpp"

namespace braidkex {

Permutation::Permutation(std::vector<std::uint8_t> image) : image_(std::move(image)) {
    const int n = static_cast<int>(image_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::uint8_t v : image_) {
        if (v >= n || seen[v]) throw DomainError("permutation table is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
}

Permutation Permutation::adjacent_transposition(int n, int g) {
    if (g < 1 || g >= n) throw DomainError("generator index out of range");
    Permutation p = identity(n);
    std::swap(p.image_[static_cast<std::size_t>(g - 1)], p.image_[static_cast<std::size_t>(g)]);
    return p;
}

Permutation Permutation::delta(int n) {
    Permutation p;
    p.image_.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.image_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(n - 1 - i);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[static_cast<std::size_t>(i)] != i) return false;
    return true;
}

Permutation Permutation::then(const Permutation& after) const {
    if (size() != after.size()) throw DomainError("permutation size mismatch");
    Permutation r;
    r.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) r.image_[i] = after.image_[image_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.image_.resize(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        r.image_[image_[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Permutation Permutation::flipped() const {
    const int n = size();
    Permutation r;
    r.image_.resize(image_.size());
    for (int i = 0; i < n; ++i)
        r.image_[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(n - 1 - image_[static_cast<std::size_t>(n - 1 - i)]);
    return r;
}

std::vector<int> cycle_type(const Permutation& p) {
    const int n = p.size();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = p[j];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

}  // namespace braidkex
