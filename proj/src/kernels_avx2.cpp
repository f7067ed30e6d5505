// AVX2+FMA kernel variants. This translation unit is the only one compiled
// with -mavx2 -mfma; the dispatcher selects these at runtime only when the
// CPU reports the matching features.

#include "tenstream/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace tenstream::kern::avx2 {

bool compiled() { return true; }

namespace {
inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swap = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swap));
}
}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

double sum(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i];
    return s;
}

double sum_sq(const double* x, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_loadu_pd(x + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * x[i];
    return s;
}

void hadamard(double* y, const double* x, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_mul_pd(_mm256_loadu_pd(y + i), _mm256_loadu_pd(x + i));
        _mm256_storeu_pd(y + i, v);
    }
    for (; i < n; ++i) y[i] *= x[i];
}

void axpy(double* y, double a, const double* x, std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d v = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, v);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double* y, double a, std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(y + i, _mm256_mul_pd(av, _mm256_loadu_pd(y + i)));
    }
    for (; i < n; ++i) y[i] *= a;
}

}  // namespace tenstream::kern::avx2

#else  // no AVX2 toolchain support: keep the symbols, forward to ref

namespace tenstream::kern::avx2 {
bool compiled() { return false; }
double dot(const double* a, const double* b, std::size_t n) { return ref::dot(a, b, n); }
double sum(const double* x, std::size_t n) { return ref::sum(x, n); }
double sum_sq(const double* x, std::size_t n) { return ref::sum_sq(x, n); }
void hadamard(double* y, const double* x, std::size_t n) { ref::hadamard(y, x, n); }
void axpy(double* y, double a, const double* x, std::size_t n) { ref::axpy(y, a, x, n); }
void scale(double* y, double a, std::size_t n) { ref::scale(y, a, n); }
}  // namespace tenstream::kern::avx2

#endif
