#pragma once

// Small symmetric-positive-definite factorizations and solves.
//
// Failure policy for every SPD solve in this project: on Cholesky breakdown,
// add a diagonal jitter of 1e-10 * trace/n and refactor, growing the jitter
// 10x per attempt, at most 3 retries; a system that still fails is reported
// as a NumericalError by the caller with context attached.

#include <cmath>
#include <string>

#include "tenstream/mat.hpp"

namespace tenstream {

// Plain lower Cholesky; returns false on breakdown (no exception).
inline bool cholesky(const Mat& a, Mat& lower) {
    const int n = a.rows();
    lower = Mat(n, n);
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= lower(j, k) * lower(j, k);
        if (!(d > 0.0) || !std::isfinite(d)) return false;
        const double ljj = std::sqrt(d);
        lower(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= lower(i, k) * lower(j, k);
            lower(i, j) = s / ljj;
        }
    }
    return true;
}

// Cholesky with the jitter-retry policy. Throws NumericalError if the matrix
// cannot be factored after 3 jittered retries.
inline Mat cholesky_jittered(const Mat& a, const std::string& context = "") {
    Mat lower;
    if (cholesky(a, lower)) return lower;
    const int n = a.rows();
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += a(i, i);
    double jitter = 1e-10 * (std::abs(trace) / std::max(1, n));
    if (jitter <= 0.0) jitter = 1e-300;
    for (int attempt = 0; attempt < 3; ++attempt) {
        Mat j = a;
        for (int i = 0; i < n; ++i) j(i, i) += jitter;
        if (cholesky(j, lower)) return lower;
        jitter *= 10.0;
    }
    throw NumericalError("SPD factorization failed after jitter retries" +
                         (context.empty() ? std::string() : " (" + context + ")"));
}

// Solves L L^T x = b in place given the lower factor.
inline void cholesky_solve_inplace(const Mat& lower, double* b) {
    const int n = lower.rows();
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= lower(i, k) * b[k];
        b[i] = s / lower(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= lower(k, i) * b[k];
        b[i] = s / lower(i, i);
    }
}

// Inverse of an SPD matrix through the jittered Cholesky.
inline Mat spd_inverse(const Mat& a, const std::string& context = "") {
    const Mat lower = cholesky_jittered(a, context);
    const int n = a.rows();
    Mat inv = Mat::identity(n);
    for (int c = 0; c < n; ++c) {
        std::vector<double> col(n);
        for (int i = 0; i < n; ++i) col[i] = inv(i, c);
        cholesky_solve_inplace(lower, col.data());
        for (int i = 0; i < n; ++i) inv(i, c) = col[i];
    }
    // Symmetrize to wash out the last-bit asymmetry of the column solves.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double s = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = s;
            inv(j, i) = s;
        }
    }
    return inv;
}

// log det(A) from the lower Cholesky factor of A.
inline double cholesky_logdet(const Mat& lower) {
    double s = 0.0;
    for (int i = 0; i < lower.rows(); ++i) s += std::log(lower(i, i));
    return 2.0 * s;
}

}  // namespace tenstream
