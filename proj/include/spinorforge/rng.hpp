#pragma once

#include <cmath>
#include <cstdint>

namespace spinorforge {

/// SplitMix64: the fixed, portable generator behind every seeded sweep.
/// Identical (seed, call sequence) gives identical streams on every platform.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (cosine branch; two uniforms per call).
    double gaussian() {
        double u1 = 1.0 - next_double(); // (0, 1]
        double u2 = next_double();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

  private:
    std::uint64_t state_;
};

/// Per-sample substream: sample k of a sweep draws from
/// SplitMix64(seed XOR golden*(k+1)), so parallel evaluation order can never
/// change results.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t k) {
    return SplitMix64(seed ^ (0x9E3779B97F4A7C15ull * (k + 1)));
}

/// FNV-1a 64-bit, used for input digests in verification failure records.
inline std::uint64_t fnv1a64(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace spinorforge
