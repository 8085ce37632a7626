#pragma once

#include <cmath>
#include <cstdint>

namespace nqpcd {

/// SplitMix64 with a fixed Box-Muller transform on top. Every seeded
/// artifact (instance generators, randomized CD, NMF initialization) draws
/// from this generator so that traces reproduce bit-for-bit across runs.
///
/// Stream contract, fixed for golden-value regressions:
///   next_u64:     z += 0x9E3779B97F4A7C15; xor-shift-multiply finalizer
///   next_uniform: (next_u64() >> 11) * 2^-53, in [0, 1)
///   next_normal:  Box-Muller on (u1, u2); u1 redrawn while zero; returns
///                 r*cos(2*pi*u2) first and caches r*sin(2*pi*u2)
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double next_normal() {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = next_uniform();
        while (u1 == 0.0) u1 = next_uniform();
        const double u2 = next_uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * kPi * u2;
        cached_ = r * std::sin(a);
        has_cached_ = true;
        return r * std::cos(a);
    }

    /// Uniform index in [0, n), via the 128-bit multiply reduction.
    std::size_t next_below(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// Independent child stream, seeded from this one.
    SplitMix64 split() { return SplitMix64(next_u64()); }

private:
    static constexpr double kPi = 3.141592653589793238462643383279502884;

    std::uint64_t state_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

}  // namespace nqpcd
