#pragma once

// Elementwise arithmetic kernels used by the inference inner loops.
//
// Every kernel has a scalar reference implementation and (on x86-64) an
// AVX2+FMA variant. The public entry points are function pointers bound at
// startup by probing the CPU; the TENSTREAM_SIMD environment variable
// ("scalar", "avx2", "auto") overrides the probe. The two variants are
// equivalence-tested against each other in the unit suite.

#include <cstddef>

namespace tenstream::kern {

enum class Backend { Auto, Scalar, Avx2 };

// Active entry points. Bound to one backend before first use.
extern double (*dot)(const double* a, const double* b, std::size_t n);
extern double (*sum)(const double* x, std::size_t n);
extern double (*sum_sq)(const double* x, std::size_t n);
// y[i] *= x[i]
extern void (*hadamard)(double* y, const double* x, std::size_t n);
// y[i] += a * x[i]
extern void (*axpy)(double* y, double a, const double* x, std::size_t n);
// y[i] *= a
extern void (*scale)(double* y, double a, std::size_t n);

// Rebinds all entry points. Backend::Auto probes the CPU and honors
// TENSTREAM_SIMD. Selecting Avx2 on a CPU without AVX2 falls back to scalar.
void select_backend(Backend b);

// Name of the backend currently bound ("scalar" or "avx2").
const char* active_backend();

bool cpu_has_avx2();

namespace ref {
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void hadamard(double* y, const double* x, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* y, double a, std::size_t n);
}  // namespace ref

namespace avx2 {
// Compiled only when the toolchain supports -mavx2 -mfma; otherwise these
// forward to ref and compiled() reports false.
bool compiled();
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* x, std::size_t n);
double sum_sq(const double* x, std::size_t n);
void hadamard(double* y, const double* x, std::size_t n);
void axpy(double* y, double a, const double* x, std::size_t n);
void scale(double* y, double a, std::size_t n);
}  // namespace avx2

}  // namespace tenstream::kern
