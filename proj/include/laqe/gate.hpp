#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace laqe {

/// Zero-based qubit index.
using QubitId = std::uint32_t;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Absolute tolerance for comparing Rz angles (after mod-2pi reduction).
inline constexpr double kAngleTol = 1e-12;

enum class GateKind : std::uint8_t { H, X, Z, S, Sdg, T, Tdg, Rz, CNOT };

constexpr bool is_two_qubit(GateKind k) { return k == GateKind::CNOT; }
constexpr bool has_angle(GateKind k) { return k == GateKind::Rz; }

const char* gate_name(GateKind k);

/// Reduces an angle into [0, 2pi).
inline double reduce_angle(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// True if the angle is zero modulo 2pi within kAngleTol.
inline bool angle_is_zero(double theta) {
    double r = reduce_angle(theta);
    return r <= kAngleTol || r >= kTwoPi - kAngleTol;
}

/// A named unitary applied to one or two qubits. CNOT stores
/// [control, target]; Rz carries an angle reduced into [0, 2pi).
class Gate {
public:
    static Gate h(QubitId q) { return Gate(GateKind::H, q); }
    static Gate x(QubitId q) { return Gate(GateKind::X, q); }
    static Gate z(QubitId q) { return Gate(GateKind::Z, q); }
    static Gate s(QubitId q) { return Gate(GateKind::S, q); }
    static Gate sdg(QubitId q) { return Gate(GateKind::Sdg, q); }
    static Gate t(QubitId q) { return Gate(GateKind::T, q); }
    static Gate tdg(QubitId q) { return Gate(GateKind::Tdg, q); }
    static Gate rz(double theta, QubitId q);
    static Gate cnot(QubitId control, QubitId target);

    /// Generic constructor; validates arity and qubit distinctness.
    static Gate make(GateKind kind, const std::array<QubitId, 2>& qs, int arity,
                     double angle = 0.0);

    GateKind kind() const { return kind_; }
    int arity() const { return arity_; }
    double angle() const { return angle_; }

    QubitId qubit(int i) const { return qubits_[static_cast<std::size_t>(i)]; }
    QubitId control() const { return qubits_[0]; }
    QubitId target() const { return qubits_[1]; }

    /// Smallest qubit index touched; used for canonical in-layer ordering.
    QubitId min_qubit() const {
        if (arity_ == 2) return qubits_[0] < qubits_[1] ? qubits_[0] : qubits_[1];
        return qubits_[0];
    }
    QubitId max_qubit() const {
        if (arity_ == 2) return qubits_[0] > qubits_[1] ? qubits_[0] : qubits_[1];
        return qubits_[0];
    }

    bool touches(QubitId q) const {
        return qubits_[0] == q || (arity_ == 2 && qubits_[1] == q);
    }

    /// Disjoint-qubits relation between two gates.
    bool disjoint_from(const Gate& other) const {
        return !other.touches(qubits_[0]) && (arity_ == 1 || !other.touches(qubits_[1]));
    }

    /// Structural equality; Rz angles compared at kAngleTol with 2pi wraparound.
    friend bool operator==(const Gate& a, const Gate& b);
    friend bool operator!=(const Gate& a, const Gate& b) { return !(a == b); }

    /// Human-readable form, e.g. "h q0", "rz(0.5) q3", "cx q0,q2".
    std::string str() const;

private:
    Gate(GateKind kind, QubitId q) : kind_(kind), arity_(1), qubits_{q, 0} {}
    Gate(GateKind kind, QubitId c, QubitId t) : kind_(kind), arity_(2), qubits_{c, t} {}

    GateKind kind_;
    std::uint8_t arity_;
    std::array<QubitId, 2> qubits_;
    double angle_ = 0.0;
};

}  // namespace laqe
