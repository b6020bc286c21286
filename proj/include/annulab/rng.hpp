#pragma once

#include <cstdint>
#include <cmath>

namespace annulab {

/// SplitMix64.  The k-th output is mix(seed + k * gamma), so draws are a pure
/// function of (seed, counter) and reproduce bit-for-bit in any language.
/// Suites derive one independent stream per sample via stream_seed().
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

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    /// Standard normal via Box-Muller (two uniforms per pair, cached).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_double();
        const double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Decorrelated per-sample seed for parallel suites.
    static std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 g(seed ^ (0xA5A5A5A55A5A5A5Aull + index * 0xD1342543DE82EF95ull));
        return g.next_u64();
    }

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace annulab
