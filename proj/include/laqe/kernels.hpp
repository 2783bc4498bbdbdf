#pragma once

#include <complex>
#include <cstddef>

namespace laqe::kernels {

using cd = std::complex<double>;

/// Statevector kernels used by the simulator. The scalar versions are
/// the reference; the AVX2 versions are equivalence-tested against them
/// and selected at runtime. `n` is the qubit count (state length 2^n);
/// qubit 0 is the least-significant bit of the basis index.
enum class Backend { Scalar, Avx2 };

/// Backend currently in use. Defaults to the best supported one;
/// the LAQE_SIMD environment variable (scalar|avx2|auto) overrides.
Backend active_backend();

/// Forces a backend; returns false (and keeps the current one) if the
/// CPU or build does not support it.
bool set_backend(Backend b);

const char* backend_name(Backend b);

/// state <- (m applied on qubit q) * state, m row-major 2x2.
void apply_1q(cd* state, int n, int q, const cd m[4]);

/// state <- diag(p0, p1) on qubit q.
void apply_diag(cd* state, int n, int q, cd p0, cd p1);

/// Controlled-not permutation.
void apply_cnot(cd* state, int n, int control, int target);

/// sum_i conj(x[i]) * y[i]
cd conj_dot(const cd* x, const cd* y, std::size_t len);

namespace detail {

void apply_1q_scalar(cd* state, int n, int q, const cd m[4]);
void apply_diag_scalar(cd* state, int n, int q, cd p0, cd p1);
void apply_cnot_scalar(cd* state, int n, int control, int target);
cd conj_dot_scalar(const cd* x, const cd* y, std::size_t len);

#if defined(LAQE_HAVE_AVX2)
void apply_1q_avx2(cd* state, int n, int q, const cd m[4]);
void apply_diag_avx2(cd* state, int n, int q, cd p0, cd p1);
void apply_cnot_avx2(cd* state, int n, int control, int target);
cd conj_dot_avx2(const cd* x, const cd* y, std::size_t len);
#endif

}  // namespace detail

}  // namespace laqe::kernels
