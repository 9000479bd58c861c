#pragma once

#include <cstdint>
#include <random>

namespace braidkex {

// All randomness flows through a 64-bit-seeded mt19937_64.  Draws below go
// through rng_below so results do not depend on the standard library's
// distribution implementations.
using Rng = std::mt19937_64;

// splitmix64; used to derive independent stream seeds from one master seed.
inline std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Unbiased uniform draw from [0, bound); bound must be nonzero.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    for (;;) {
        const std::uint64_t x = rng();
        const std::uint64_t r = x % bound;
        if (x - r <= ~bound + 1) return r;  // rejects the final partial block
    }
}

}  // namespace braidkex
