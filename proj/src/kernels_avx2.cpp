#include "laqe/kernels.hpp"

#if defined(LAQE_HAVE_AVX2)

#include <immintrin.h>

namespace laqe::kernels::detail {

namespace {

// A __m256d holds two complex doubles: [re0, im0, re1, im1].

// Multiplies two packed complexes by per-lane complex constants whose
// real parts are in wr = [ar, ar, br, br] and imaginary parts in
// wi = [ai, ai, bi, bi].
inline __m256d cmul(__m256d v, __m256d wr, __m256d wi) {
    __m256d t1 = _mm256_mul_pd(v, wr);
    __m256d vs = _mm256_permute_pd(v, 0b0101);  // [im0, re0, im1, re1]
    __m256d t2 = _mm256_mul_pd(vs, wi);
    return _mm256_addsub_pd(t1, t2);
}

inline __m256d broadcast_re(cd z) { return _mm256_set1_pd(z.real()); }
inline __m256d broadcast_im(cd z) { return _mm256_set1_pd(z.imag()); }

inline __m256d lanes_re(cd lo, cd hi) {
    return _mm256_setr_pd(lo.real(), lo.real(), hi.real(), hi.real());
}
inline __m256d lanes_im(cd lo, cd hi) {
    return _mm256_setr_pd(lo.imag(), lo.imag(), hi.imag(), hi.imag());
}

inline double* dp(cd* p) { return reinterpret_cast<double*>(p); }
inline const double* dp(const cd* p) { return reinterpret_cast<const double*>(p); }

}  // namespace

void apply_1q_avx2(cd* state, int n, int q, const cd m[4]) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t stride = std::size_t{1} << q;
    if (q == 0) {
        // Amplitude pairs are adjacent: one register holds both.
        const __m256d r0 = lanes_re(m[0], m[2]), i0 = lanes_im(m[0], m[2]);
        const __m256d r1 = lanes_re(m[1], m[3]), i1 = lanes_im(m[1], m[3]);
        for (std::size_t i = 0; i < dim; i += 2) {
            __m256d v = _mm256_loadu_pd(dp(state + i));
            __m256d a = _mm256_permute2f128_pd(v, v, 0x00);  // [a, a]
            __m256d b = _mm256_permute2f128_pd(v, v, 0x11);  // [b, b]
            __m256d res = _mm256_add_pd(cmul(a, r0, i0), cmul(b, r1, i1));
            _mm256_storeu_pd(dp(state + i), res);
        }
        return;
    }
    const __m256d r00 = broadcast_re(m[0]), i00 = broadcast_im(m[0]);
    const __m256d r01 = broadcast_re(m[1]), i01 = broadcast_im(m[1]);
    const __m256d r10 = broadcast_re(m[2]), i10 = broadcast_im(m[2]);
    const __m256d r11 = broadcast_re(m[3]), i11 = broadcast_im(m[3]);
    for (std::size_t base = 0; base < dim; base += stride * 2) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d va = _mm256_loadu_pd(dp(state + i));
            __m256d vb = _mm256_loadu_pd(dp(state + i + stride));
            __m256d na = _mm256_add_pd(cmul(va, r00, i00), cmul(vb, r01, i01));
            __m256d nb = _mm256_add_pd(cmul(va, r10, i10), cmul(vb, r11, i11));
            _mm256_storeu_pd(dp(state + i), na);
            _mm256_storeu_pd(dp(state + i + stride), nb);
        }
    }
}

void apply_diag_avx2(cd* state, int n, int q, cd p0, cd p1) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t stride = std::size_t{1} << q;
    if (q == 0) {
        const __m256d wr = lanes_re(p0, p1), wi = lanes_im(p0, p1);
        for (std::size_t i = 0; i < dim; i += 2) {
            __m256d v = _mm256_loadu_pd(dp(state + i));
            _mm256_storeu_pd(dp(state + i), cmul(v, wr, wi));
        }
        return;
    }
    const __m256d r0 = broadcast_re(p0), i0 = broadcast_im(p0);
    const __m256d r1 = broadcast_re(p1), i1 = broadcast_im(p1);
    for (std::size_t base = 0; base < dim; base += stride * 2) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d v0 = _mm256_loadu_pd(dp(state + i));
            __m256d v1 = _mm256_loadu_pd(dp(state + i + stride));
            _mm256_storeu_pd(dp(state + i), cmul(v0, r0, i0));
            _mm256_storeu_pd(dp(state + i + stride), cmul(v1, r1, i1));
        }
    }
}

void apply_cnot_avx2(cd* state, int n, int control, int target) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    if (target == 0) {
        // Swapping adjacent amplitudes: permute lanes within a register.
        for (std::size_t i = 0; i < dim; i += 2) {
            if (i & cbit) {
                __m256d v = _mm256_loadu_pd(dp(state + i));
                _mm256_storeu_pd(dp(state + i), _mm256_permute2f128_pd(v, v, 0x01));
            }
        }
        return;
    }
    auto swap_run = [&](std::size_t from, std::size_t count) {
        std::size_t i = from;
        for (; i + 2 <= from + count; i += 2) {
            __m256d a = _mm256_loadu_pd(dp(state + i));
            __m256d b = _mm256_loadu_pd(dp(state + i + tbit));
            _mm256_storeu_pd(dp(state + i), b);
            _mm256_storeu_pd(dp(state + i + tbit), a);
        }
        for (; i < from + count; ++i) {
            cd tmp = state[i];
            state[i] = state[i + tbit];
            state[i + tbit] = tmp;
        }
    };
    if (control > target) {
        // Control bit is constant across each target-stride run.
        for (std::size_t g = 0; g < dim; g += tbit * 2)
            if (g & cbit) swap_run(g, tbit);
    } else {
        // Control bit alternates with period 2*cbit inside each run.
        for (std::size_t g = 0; g < dim; g += tbit * 2)
            for (std::size_t h = g + cbit; h < g + tbit; h += cbit * 2) swap_run(h, cbit);
    }
}

cd conj_dot_avx2(const cd* x, const cd* y, std::size_t len) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d vx = _mm256_loadu_pd(dp(x + i));
        __m256d vy = _mm256_loadu_pd(dp(y + i));
        acc_re = _mm256_fmadd_pd(vx, vy, acc_re);
        __m256d vxs = _mm256_permute_pd(vx, 0b0101);  // [xi, xr, ...]
        acc_im = _mm256_fmadd_pd(vxs, vy, acc_im);
    }
    alignas(32) double re4[4], im4[4];
    _mm256_store_pd(re4, acc_re);
    _mm256_store_pd(im4, acc_im);
    // re lanes hold xr*yr and xi*yi; im lanes hold xi*yr and xr*yi.
    double re = re4[0] + re4[1] + re4[2] + re4[3];
    double im = (im4[1] - im4[0]) + (im4[3] - im4[2]);
    for (; i < len; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

}  // namespace laqe::kernels::detail

#endif  // LAQE_HAVE_AVX2
