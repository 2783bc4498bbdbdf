#include "laqe/random_circuit.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace laqe {

Circuit generate_random_circuit(const RandomCircuitSpec& spec) {
    if (spec.num_qubits < 2 || spec.num_qubits > 12)
        throw std::invalid_argument("random circuits support 2..12 qubits");

    std::vector<GateKind> kinds;
    std::vector<std::uint32_t> weights;
    for (const auto& [kind, w] : spec.gate_mix) {
        if (w == 0) continue;
        kinds.push_back(kind);
        weights.push_back(w);
    }
    if (kinds.empty()) throw std::invalid_argument("gate mix must have a positive weight");

    std::mt19937_64 rng(spec.seed);
    std::discrete_distribution<std::size_t> pick_kind(weights.begin(), weights.end());
    std::uniform_int_distribution<std::uint32_t> pick_qubit(0, spec.num_qubits - 1);
    std::uniform_real_distribution<double> pick_angle(0.0, kTwoPi);

    std::vector<Gate> gates;
    gates.reserve(spec.num_gates);
    for (std::size_t i = 0; i < spec.num_gates; ++i) {
        GateKind kind = kinds[pick_kind(rng)];
        if (kind == GateKind::CNOT) {
            QubitId a = pick_qubit(rng);
            QubitId b = pick_qubit(rng);
            while (b == a) b = pick_qubit(rng);
            gates.push_back(Gate::cnot(a, b));
        } else if (kind == GateKind::Rz) {
            gates.push_back(Gate::rz(pick_angle(rng), pick_qubit(rng)));
        } else {
            gates.push_back(Gate::make(kind, {pick_qubit(rng), 0}, 1));
        }
    }
    return pack_layers(spec.num_qubits, gates);
}

}  // namespace laqe
