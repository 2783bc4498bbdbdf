#include "laqe/kernels.hpp"

namespace laqe::kernels::detail {

void apply_1q_scalar(cd* state, int n, int q, const cd m[4]) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += stride * 2) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cd a = state[i];
            const cd b = state[i + stride];
            state[i] = m[0] * a + m[1] * b;
            state[i + stride] = m[2] * a + m[3] * b;
        }
    }
}

void apply_diag_scalar(cd* state, int n, int q, cd p0, cd p1) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += stride * 2) {
        for (std::size_t i = base; i < base + stride; ++i) {
            state[i] *= p0;
            state[i + stride] *= p1;
        }
    }
}

void apply_cnot_scalar(cd* state, int n, int control, int target) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t g = 0; g < dim; g += tbit * 2) {
        for (std::size_t i = g; i < g + tbit; ++i) {
            if (i & cbit) {
                cd tmp = state[i];
                state[i] = state[i + tbit];
                state[i + tbit] = tmp;
            }
        }
    }
}

cd conj_dot_scalar(const cd* x, const cd* y, std::size_t len) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
        im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
    }
    return {re, im};
}

}  // namespace laqe::kernels::detail
