#include "laqe/gate.hpp"

#include <cstdio>

namespace laqe {

const char* gate_name(GateKind k) {
    switch (k) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::Z: return "z";
        case GateKind::S: return "s";
        case GateKind::Sdg: return "sdg";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::Rz: return "rz";
        case GateKind::CNOT: return "cx";
    }
    return "?";
}

Gate Gate::rz(double theta, QubitId q) {
    if (!std::isfinite(theta)) throw std::invalid_argument("rz angle must be finite");
    Gate g(GateKind::Rz, q);
    g.angle_ = reduce_angle(theta);
    return g;
}

Gate Gate::cnot(QubitId control, QubitId target) {
    if (control == target) throw std::invalid_argument("cx qubits must be distinct");
    return Gate(GateKind::CNOT, control, target);
}

Gate Gate::make(GateKind kind, const std::array<QubitId, 2>& qs, int arity, double angle) {
    if (arity != (is_two_qubit(kind) ? 2 : 1))
        throw std::invalid_argument(std::string("bad arity for gate ") + gate_name(kind));
    if (kind == GateKind::CNOT) return cnot(qs[0], qs[1]);
    if (kind == GateKind::Rz) return rz(angle, qs[0]);
    Gate g(kind, qs[0]);
    return g;
}

bool operator==(const Gate& a, const Gate& b) {
    if (a.kind_ != b.kind_ || a.arity_ != b.arity_) return false;
    if (a.qubits_[0] != b.qubits_[0]) return false;
    if (a.arity_ == 2 && a.qubits_[1] != b.qubits_[1]) return false;
    if (a.kind_ == GateKind::Rz) {
        double d = std::fabs(a.angle_ - b.angle_);
        if (d > kAngleTol && d < kTwoPi - kAngleTol) return false;
    }
    return true;
}

std::string Gate::str() const {
    char buf[64];
    if (kind_ == GateKind::Rz) {
        std::snprintf(buf, sizeof buf, "rz(%.17g) q%u", angle_, qubits_[0]);
    } else if (arity_ == 2) {
        std::snprintf(buf, sizeof buf, "%s q%u,q%u", gate_name(kind_), qubits_[0], qubits_[1]);
    } else {
        std::snprintf(buf, sizeof buf, "%s q%u", gate_name(kind_), qubits_[0]);
    }
    return buf;
}

}  // namespace laqe
