#include "laqe/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "laqe/kernels.hpp"

namespace laqe {

namespace {

using cd = std::complex<double>;

constexpr double kInvSqrt2 = 0.70710678118654752440084436210;
constexpr double kPi = 3.14159265358979323846264338328;

void check_sim_cap(std::uint32_t n) {
    if (n > kMaxSimQubits)
        throw std::invalid_argument(
            "simulation capped at " + std::to_string(kMaxSimQubits) +
            " qubits (memory is 2^(2n) complex entries); use the randomized "
            "statevector check for larger circuits");
}

}  // namespace

Unitary::Unitary(std::uint32_t num_qubits)
    : num_qubits_(num_qubits), dim_(std::size_t{1} << num_qubits) {
    check_sim_cap(num_qubits);
    data_.assign(dim_ * dim_, cd{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) at(i, i) = cd{1.0, 0.0};
}

void apply_gate(cd* state, int num_qubits, const Gate& g) {
    const int q = static_cast<int>(g.qubit(0));
    switch (g.kind()) {
        case GateKind::H: {
            const cd m[4] = {{kInvSqrt2, 0}, {kInvSqrt2, 0}, {kInvSqrt2, 0}, {-kInvSqrt2, 0}};
            kernels::apply_1q(state, num_qubits, q, m);
            return;
        }
        case GateKind::X: {
            const cd m[4] = {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
            kernels::apply_1q(state, num_qubits, q, m);
            return;
        }
        case GateKind::Z:
            kernels::apply_diag(state, num_qubits, q, {1, 0}, {-1, 0});
            return;
        case GateKind::S:
            kernels::apply_diag(state, num_qubits, q, {1, 0}, {0, 1});
            return;
        case GateKind::Sdg:
            kernels::apply_diag(state, num_qubits, q, {1, 0}, {0, -1});
            return;
        case GateKind::T:
            kernels::apply_diag(state, num_qubits, q, {1, 0}, std::polar(1.0, kPi / 4));
            return;
        case GateKind::Tdg:
            kernels::apply_diag(state, num_qubits, q, {1, 0}, std::polar(1.0, -kPi / 4));
            return;
        case GateKind::Rz:
            kernels::apply_diag(state, num_qubits, q, std::polar(1.0, -g.angle() / 2),
                                std::polar(1.0, g.angle() / 2));
            return;
        case GateKind::CNOT:
            kernels::apply_cnot(state, num_qubits, static_cast<int>(g.control()),
                                static_cast<int>(g.target()));
            return;
    }
}

void apply_circuit(cd* state, int num_qubits, const Circuit& c) {
    for (const Layer& l : c.layers())
        for (const Gate& g : l) apply_gate(state, num_qubits, g);
}

Unitary to_unitary(const Circuit& c) {
    check_sim_cap(c.num_qubits());
    Unitary u(c.num_qubits());
    const int n = static_cast<int>(c.num_qubits());
    for (std::size_t col = 0; col < u.dim(); ++col) apply_circuit(u.col(col), n, c);
    return u;
}

bool equivalent(const Circuit& c1, const Circuit& c2, double tol) {
    if (c1.num_qubits() != c2.num_qubits())
        throw std::invalid_argument("equivalent: qubit-count mismatch");
    check_sim_cap(c1.num_qubits());

    const Unitary u1 = to_unitary(c1);
    const Unitary u2 = to_unitary(c2);
    const std::size_t dim = u1.dim();

    // M = U1^dag U2; M[k][j] = <col_k(U1), col_j(U2)>
    std::vector<cd> m(dim * dim);
    for (std::size_t j = 0; j < dim; ++j)
        for (std::size_t k = 0; k < dim; ++k)
            m[j * dim + k] = kernels::conj_dot(u1.col(k), u2.col(j), dim);

    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t k = 0; k < dim; ++k) {
        double mag = std::abs(m[k * dim + k]);
        if (mag > best_mag) {
            best_mag = mag;
            best = k;
        }
    }
    if (best_mag <= tol) return false;  // diagonal vanished: not a phase multiple
    const cd phase = m[best * dim + best] / best_mag;

    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
            cd expect = (k == j) ? phase : cd{0, 0};
            if (std::abs(m[j * dim + k] - expect) > tol) return false;
        }
    }
    return true;
}

bool equivalent_randomized(const Circuit& c1, const Circuit& c2, double tol, int num_states,
                           std::uint64_t seed) {
    if (c1.num_qubits() != c2.num_qubits())
        throw std::invalid_argument("equivalent: qubit-count mismatch");
    const int n = static_cast<int>(c1.num_qubits());
    const std::size_t dim = std::size_t{1} << n;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    std::vector<cd> psi(dim), u(dim), v(dim);
    for (int s = 0; s < num_states; ++s) {
        double norm2 = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            psi[i] = cd{gauss(rng), gauss(rng)};
            norm2 += std::norm(psi[i]);
        }
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t i = 0; i < dim; ++i) psi[i] *= inv;

        u = psi;
        v = psi;
        apply_circuit(u.data(), n, c1);
        apply_circuit(v.data(), n, c2);

        cd overlap = kernels::conj_dot(u.data(), v.data(), dim);
        double mag = std::abs(overlap);
        if (mag <= tol) return false;
        cd phase = overlap / mag;
        for (std::size_t i = 0; i < dim; ++i)
            if (std::abs(v[i] - phase * u[i]) > tol) return false;
    }
    return true;
}

std::string JudgmentResult::describe() const {
    if (holds) return "holds";
    std::ostringstream ss;
    ss << "fails";
    if (range_witness) ss << " at layers [" << range_witness->start << "," << range_witness->end << ")";
    if (gate_witness) ss << " at layer " << gate_witness->first << " gate " << gate_witness->second.str();
    return ss.str();
}

JudgmentResult is_compact(const Circuit& c) {
    for (std::size_t i = 0; i < c.length(); ++i) {
        if (c.layer(i).empty()) {
            JudgmentResult r;
            r.holds = false;
            r.range_witness = SegmentRange{static_cast<std::int64_t>(i),
                                           static_cast<std::int64_t>(i) + 1};
            return r;
        }
        if (i == 0) continue;
        for (const Gate& g : c.layer(i)) {
            if (c.layer(i - 1).disjoint_from(g)) {
                JudgmentResult r;
                r.holds = false;
                r.gate_witness = {i, g};
                return r;
            }
        }
    }
    return {};
}

JudgmentResult is_segment_optimal(const Circuit& c, Oracle& orc, const CostFn& f,
                                  std::size_t omega) {
    const auto len = static_cast<std::int64_t>(c.length());
    const auto w = static_cast<std::int64_t>(omega);
    for (std::int64_t i = 0; i == 0 || i + w <= len; ++i) {
        SegmentRange r{i, std::min(i + w, len)};
        Circuit window = slice(c, r);
        Circuit out = orc.optimize(window);
        if (f.eval(out) < f.eval(window)) {
            JudgmentResult jr;
            jr.holds = false;
            jr.range_witness = r;
            return jr;
        }
        if (len <= w) break;
    }
    return {};
}

JudgmentResult is_locally_optimal(const Circuit& c, Oracle& orc, const CostFn& f,
                                  std::size_t omega) {
    JudgmentResult compact = is_compact(c);
    if (!compact.holds) return compact;
    return is_segment_optimal(c, orc, f, omega);
}

}  // namespace laqe
