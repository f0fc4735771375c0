#pragma once

#include <cmath>
#include <cstdint>

namespace fairaudit {

/// Counter-based deterministic random source. Draw i of stream s under seed
/// q is SplitMix64's finalizer applied to mix(q, s) + i * GOLDEN, so the
/// sequence is a pure function of (seed, stream, i) and identical on every
/// platform. Streams never share state; generators for different columns
/// can advance independently without affecting each other.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream)
        : base_(finalize(seed + kGolden) ^ finalize(stream * kGolden + kWeyl)) {}

    std::uint64_t next_u64() {
        ++counter_;
        return finalize(base_ + counter_ * kGolden);
    }

    /// Uniform in [0, 1) with 53-bit resolution.
    double next_uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_uniform(double lo, double hi) {
        return lo + (hi - lo) * next_uniform01();
    }

    /// Box-Muller transform; consumes exactly two 64-bit draws per call.
    double next_normal(double mean, double stddev) {
        const double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        const double u2 = next_uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * kPi * u2;
        return mean + stddev * radius * std::cos(angle);
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kWeyl = 0x6A09E667F3BCC909ULL;
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t finalize(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

} // namespace fairaudit
