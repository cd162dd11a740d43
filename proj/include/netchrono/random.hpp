#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace netchrono {

/**
 * Seeded generator used for every stochastic step: 64-bit Mersenne Twister
 * (std::mt19937_64, whose output sequence is fixed by the standard). Uniform
 * reals are built from the top 53 bits directly rather than through
 * std::uniform_real_distribution, whose algorithm is implementation-defined.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform real in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound), bound > 0.
    std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(uniform01() * static_cast<double>(bound));
    }

private:
    std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for the `index`-th independent stream under `master`:
/// mix64(mix64(master) ^ index). Stable across runs and thread schedules.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return mix64(mix64(master) ^ index);
}

} // namespace netchrono
