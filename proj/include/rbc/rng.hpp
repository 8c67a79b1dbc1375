#pragma once

// Seeded random number utilities. All stochastic code in the library draws
// through these helpers so that runs are reproducible from a single seed and
// independent of worker count: parallel loops seed one engine per index via
// derive_seed(master, index) instead of sharing a stream.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rbc {

using RngEngine = std::mt19937_64;

// SplitMix64 step; used for seed derivation, not as a user-facing generator.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0xD6E8FEB86659FD93ULL * (index + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return a ^ (b >> 1);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return derive_seed(derive_seed(master, a), b);
}

// Uniform double in [0, 1). Hand-rolled from the raw 64-bit draw so that the
// stream is identical across standard library implementations.
inline double uniform01(RngEngine& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(RngEngine& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Uniform integer in [0, n); n must be positive.
inline std::uint64_t uniform_index(RngEngine& rng, std::uint64_t n) {
    // Rejection to avoid modulo bias.
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// Standard normal via Box-Muller (portable, unlike std::normal_distribution).
inline double gaussian(RngEngine& rng) {
    double u1;
    do {
        u1 = uniform01(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform01(rng);
    const double r = std::sqrt(-2.0 * std::log(u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
}

// Uniform point on the unit sphere S^(N-1).
inline std::vector<double> uniform_sphere(RngEngine& rng, int dim) {
    std::vector<double> v(static_cast<std::size_t>(dim));
    while (true) {
        double norm2 = 0.0;
        for (auto& c : v) {
            c = gaussian(rng);
            norm2 += c * c;
        }
        if (norm2 > 1e-24) {
            const double inv = 1.0 / std::sqrt(norm2);
            for (auto& c : v) c *= inv;
            return v;
        }
    }
}

}  // namespace rbc
