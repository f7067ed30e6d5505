#include "tenstream/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tenstream::kern {

double (*dot)(const double*, const double*, std::size_t) = ref::dot;
double (*sum)(const double*, std::size_t) = ref::sum;
double (*sum_sq)(const double*, std::size_t) = ref::sum_sq;
void (*hadamard)(double*, const double*, std::size_t) = ref::hadamard;
void (*axpy)(double*, double, const double*, std::size_t) = ref::axpy;
void (*scale)(double*, double, std::size_t) = ref::scale;

namespace {
const char* g_active = "scalar";

void bind_scalar() {
    dot = ref::dot;
    sum = ref::sum;
    sum_sq = ref::sum_sq;
    hadamard = ref::hadamard;
    axpy = ref::axpy;
    scale = ref::scale;
    g_active = "scalar";
}

void bind_avx2() {
    dot = avx2::dot;
    sum = avx2::sum;
    sum_sq = avx2::sum_sq;
    hadamard = avx2::hadamard;
    axpy = avx2::axpy;
    scale = avx2::scale;
    g_active = "avx2";
}
}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

void select_backend(Backend b) {
    if (b == Backend::Auto) {
        const char* env = std::getenv("TENSTREAM_SIMD");
        if (env != nullptr) {
            if (std::strcmp(env, "scalar") == 0) b = Backend::Scalar;
            else if (std::strcmp(env, "avx2") == 0) b = Backend::Avx2;
        }
    }
    if (b == Backend::Scalar) {
        bind_scalar();
        return;
    }
    // Avx2 or Auto: require both toolchain support and CPU features.
    if (avx2::compiled() && cpu_has_avx2()) {
        bind_avx2();
    } else {
        bind_scalar();
    }
}

const char* active_backend() { return g_active; }

namespace {
// Bind once before main() so library users get the probed backend by default.
const int g_init = [] {
    select_backend(Backend::Auto);
    return 0;
}();
}  // namespace

}  // namespace tenstream::kern
