#pragma once

#include <cstdint>

namespace windrose::rng {

inline constexpr std::uint64_t golden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 output function; bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// The index-th word of the SplitMix64 stream seeded with `seed`.
// Counter-based, so draws can be made in any order (or in parallel)
// and still agree with a sequential run.
constexpr std::uint64_t at(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + golden * (index + 1));
}

// Sequential generator over the same stream, for consumers that walk
// a substream (annealing moves, rejection loops).
class SplitMix {
public:
    explicit constexpr SplitMix(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += golden;
        return mix64(state_);
    }

    // Uniform in [0, n), exact (rejection, no modulo bias).
    std::uint32_t next_below(std::uint32_t n) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
        std::uint64_t v = next();
        while (v > limit) v = next();
        return static_cast<std::uint32_t>(v % n);
    }

    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace windrose::rng
