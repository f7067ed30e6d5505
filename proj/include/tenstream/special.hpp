#pragma once

#include <cmath>

namespace tenstream {

// Digamma via upward recurrence to x >= 6 plus the asymptotic series.
// Accurate to ~1e-12 for x > 0, which covers every Gamma shape this
// code produces (smallest is the 1e-6 broad-prior shape).
inline double digamma(double x) {
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv;
    // Bernoulli-number series: 1/12 - 1/120 z + 1/252 z^2 - 1/240 z^3 + 1/132 z^4
    result -= inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 / 132.0))));
    return result;
}

// Entropy of a shape/rate Gamma distribution.
inline double gamma_entropy(double shape, double rate) {
    return shape - std::log(rate) + std::lgamma(shape) + (1.0 - shape) * digamma(shape);
}

}  // namespace tenstream
