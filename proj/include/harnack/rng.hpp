#pragma once

#include <cmath>
#include <cstdint>

#include "harnack/complex_matrix.hpp"

namespace harnack {

/// SplitMix64 finalizer. Used both as the PRNG step and to derive
/// independent per-trial seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Combines a base seed with a stream index so that streams are
/// independent of evaluation order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// Deterministic 64-bit PRNG (splitmix stream) with Box-Muller
/// Gaussians. Not std::mt19937 on purpose: outputs must be identical
/// across platforms and standard-library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard real Gaussian via Box-Muller; caches the second draw.
    double gaussian() {
        if (have_cache_) {
            have_cache_ = false;
            return cache_;
        }
        // (0, 1] for the log argument.
        const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        cache_ = radius * std::sin(angle);
        have_cache_ = true;
        return radius * std::cos(angle);
    }

    /// Standard complex Gaussian, E|z|^2 = 1.
    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re * 0.7071067811865476, im * 0.7071067811865476);
    }

private:
    std::uint64_t state_;
    double cache_ = 0.0;
    bool have_cache_ = false;
};

} // namespace harnack
