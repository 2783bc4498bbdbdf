#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "laqe/circuit.hpp"
#include "laqe/cost.hpp"
#include "laqe/oracle.hpp"

namespace laqe {

/// Hard cap for dense simulation: memory is 2^(2n) complex entries.
inline constexpr std::uint32_t kMaxSimQubits = 12;

/// Dense 2^n x 2^n complex matrix, column-major.
class Unitary {
public:
    explicit Unitary(std::uint32_t num_qubits);

    std::uint32_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return std::size_t{1} << num_qubits_; }

    std::complex<double>& at(std::size_t row, std::size_t col) {
        return data_[col * dim_ + row];
    }
    const std::complex<double>& at(std::size_t row, std::size_t col) const {
        return data_[col * dim_ + row];
    }

    std::complex<double>* col(std::size_t c) { return data_.data() + c * dim_; }
    const std::complex<double>* col(std::size_t c) const { return data_.data() + c * dim_; }

private:
    std::uint32_t num_qubits_;
    std::size_t dim_;
    std::vector<std::complex<double>> data_;
};

/// Applies one gate to a statevector of 2^n amplitudes; qubit 0 is the
/// least-significant bit of the basis index.
void apply_gate(std::complex<double>* state, int num_qubits, const Gate& g);

/// Applies every layer left to right to a statevector.
void apply_circuit(std::complex<double>* state, int num_qubits, const Circuit& c);

/// Full operator of the circuit, layers applied left to right.
/// Throws std::invalid_argument beyond kMaxSimQubits.
Unitary to_unitary(const Circuit& c);

/// True iff U(c2) = e^{i phi} U(c1) for some global phase, tested via
/// max |U1^dag U2 - e^{i phi} I| <= tol with phi taken from the
/// largest-magnitude diagonal entry of U1^dag U2.
bool equivalent(const Circuit& c1, const Circuit& c2, double tol);

/// Randomized statevector probe: applies both circuits to `num_states`
/// seeded random states and compares up to a per-run global phase.
/// Sound but incomplete; intended for 9-12 qubits where dense matrices
/// get heavy.
bool equivalent_randomized(const Circuit& c1, const Circuit& c2, double tol,
                           int num_states = 20, std::uint64_t seed = 0x1a0e5eedULL);

/// Outcome of an executable optimality judgment. A failing result
/// carries a witness locating the first violation.
struct JudgmentResult {
    bool holds = true;
    std::optional<SegmentRange> range_witness;
    std::optional<std::pair<std::size_t, Gate>> gate_witness;

    explicit operator bool() const { return holds; }
    std::string describe() const;
};

/// Compact judgment: no empty layers, and every gate in layer i >= 1
/// clashes on some qubit with layer i-1.
JudgmentResult is_compact(const Circuit& c);

/// Segment optimality: no clamped window of length <= omega can be
/// improved (in cost) by the oracle. Checking the maximal windows
/// suffices; a sub-window improvement implies its enclosing window
/// improves.
JudgmentResult is_segment_optimal(const Circuit& c, Oracle& orc, const CostFn& f,
                                  std::size_t omega);

/// Local optimality: compact and segment optimal.
JudgmentResult is_locally_optimal(const Circuit& c, Oracle& orc, const CostFn& f,
                                  std::size_t omega);

}  // namespace laqe
