#include "laqe/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace laqe::kernels {

namespace {

bool avx2_supported() {
#if defined(LAQE_HAVE_AVX2)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend detect() {
    if (const char* env = std::getenv("LAQE_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::Scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Backend::Avx2;
        // "auto" or anything else falls through to detection
    }
    return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend g_backend = detect();

}  // namespace

Backend active_backend() { return g_backend; }

bool set_backend(Backend b) {
    if (b == Backend::Avx2 && !avx2_supported()) return false;
    g_backend = b;
    return true;
}

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
    }
    return "?";
}

void apply_1q(cd* state, int n, int q, const cd m[4]) {
#if defined(LAQE_HAVE_AVX2)
    if (g_backend == Backend::Avx2) return detail::apply_1q_avx2(state, n, q, m);
#endif
    detail::apply_1q_scalar(state, n, q, m);
}

void apply_diag(cd* state, int n, int q, cd p0, cd p1) {
#if defined(LAQE_HAVE_AVX2)
    if (g_backend == Backend::Avx2) return detail::apply_diag_avx2(state, n, q, p0, p1);
#endif
    detail::apply_diag_scalar(state, n, q, p0, p1);
}

void apply_cnot(cd* state, int n, int control, int target) {
#if defined(LAQE_HAVE_AVX2)
    if (g_backend == Backend::Avx2) return detail::apply_cnot_avx2(state, n, control, target);
#endif
    detail::apply_cnot_scalar(state, n, control, target);
}

cd conj_dot(const cd* x, const cd* y, std::size_t len) {
#if defined(LAQE_HAVE_AVX2)
    if (g_backend == Backend::Avx2) return detail::conj_dot_avx2(x, y, len);
#endif
    return detail::conj_dot_scalar(x, y, len);
}

}  // namespace laqe::kernels
