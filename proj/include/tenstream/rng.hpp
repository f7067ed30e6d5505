#pragma once

// Seedable, cross-platform-reproducible random number generation.
//
// std::mt19937_64 has a fully specified algorithm, so the raw stream is
// identical everywhere; the distributions below are implemented here (rather
// than via <random> distribution objects, whose output is
// implementation-defined) so that a given seed yields bitwise-identical
// samples on every platform.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace tenstream {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        // Modulo bias is negligible for n << 2^64 and keeps the stream
        // consumption deterministic (one draw per call).
        return gen_() % n;
    }

    // Standard normal via the trigonometric Box-Muller transform.
    // Consumes two uniforms per pair; the spare is cached.
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tenstream
