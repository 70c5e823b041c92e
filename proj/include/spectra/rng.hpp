#pragma once

#include <cstdint>
#include <random>
#include <utility>

namespace spectra {

// SplitMix64 finalizer. Bijective on 64-bit integers.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Stream-splitting rule used throughout the simulator: the substream
// identified by (tag, index) under a master seed is seeded with
//   mix64(mix64(mix64(master) ^ tag) ^ index).
// Two-level splits chain this (derive a run seed, then derive from it).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                    std::uint64_t index) {
    return mix64(mix64(mix64(master) ^ tag) ^ index);
}

// Deterministic random stream. Wraps mt19937_64 but applies its own
// uniform/normal transforms so that sequences do not depend on the
// standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform double in [0, 1).
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, n), n > 0. Unbiased via rejection.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    // Pair of independent N(0, sigma^2) samples (Box-Muller, exactly two
    // uniforms consumed per call).
    std::pair<double, double> normal_pair(double sigma);

private:
    std::mt19937_64 engine_;
};

}  // namespace spectra
