#pragma once

#include <cstdint>

namespace leachsim {

/**
 * Seeded PRNG for deterministic simulation runs.
 *
 * splitmix64 (Sebastiano Vigna, public domain). Integer-only state
 * transition, so the same seed yields bit-identical streams on every
 * platform; doubles take the top 53 bits, giving uniforms in [0, 1).
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 mantissa bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

}  // namespace leachsim
