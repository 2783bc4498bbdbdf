#pragma once

#include <cstdint>
#include <map>

#include "laqe/circuit.hpp"

namespace laqe {

/// Seeded random circuit description. Generation is deterministic for
/// a fixed spec (mt19937_64 driven).
struct RandomCircuitSpec {
    std::uint32_t num_qubits = 4;  // 2..12
    std::size_t num_gates = 100;
    /// Relative draw weights per kind; kinds with weight 0 never occur.
    std::map<GateKind, std::uint32_t> gate_mix = default_mix();
    std::uint64_t seed = 1;

    static std::map<GateKind, std::uint32_t> default_mix() {
        return {
            {GateKind::H, 4}, {GateKind::X, 2},   {GateKind::Z, 1},
            {GateKind::S, 1}, {GateKind::Sdg, 1}, {GateKind::T, 2},
            {GateKind::Tdg, 2}, {GateKind::Rz, 3}, {GateKind::CNOT, 4},
        };
    }
};

/// Draws num_gates gates per the mix (CNOT qubits distinct, Rz angles
/// uniform in [0, 2pi)) and packs them greedily into layers, so the
/// result is compact.
Circuit generate_random_circuit(const RandomCircuitSpec& spec);

}  // namespace laqe
