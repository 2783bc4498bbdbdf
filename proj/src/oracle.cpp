#include "laqe/oracle.hpp"

#include <vector>

namespace laqe {

namespace {

// Rewriting works on the dependency order of the flattened gate list.
// Each node keeps per-qubit predecessor/successor links, so "adjacent"
// means no intervening gate on the pattern's qubits, exactly the
// condition under which the rewrite is sound.
struct Node {
    Gate gate;
    bool alive = true;
    // prev/next gate index per qubit slot (0 = first operand, 1 = second)
    std::array<int, 2> prev{-1, -1};
    std::array<int, 2> next{-1, -1};
};

class Wirework {
public:
    Wirework(const Circuit& c) : num_qubits_(c.num_qubits()) {
        auto flat = c.flatten();
        nodes_.reserve(flat.size());
        std::vector<int> last(num_qubits_, -1);
        for (const Gate& g : flat) {
            int idx = static_cast<int>(nodes_.size());
            nodes_.push_back(Node{g});
            for (int s = 0; s < g.arity(); ++s) {
                QubitId q = g.qubit(s);
                int p = last[q];
                nodes_[idx].prev[s] = p;
                if (p >= 0) slot_link(p, q, idx);
                last[q] = idx;
            }
        }
    }

    int next_on(int idx, QubitId q) const { return nodes_[idx].next[slot_of(idx, q)]; }
    int prev_on(int idx, QubitId q) const { return nodes_[idx].prev[slot_of(idx, q)]; }

    const Gate& gate(int idx) const { return nodes_[idx].gate; }
    bool alive(int idx) const { return nodes_[idx].alive; }
    std::size_t count() const { return nodes_.size(); }

    void remove(int idx) {
        Node& n = nodes_[idx];
        for (int s = 0; s < n.gate.arity(); ++s) {
            QubitId q = n.gate.qubit(s);
            int p = n.prev[s], nx = n.next[s];
            if (p >= 0) nodes_[p].next[slot_of(p, q)] = nx;
            if (nx >= 0) nodes_[nx].prev[slot_of(nx, q)] = p;
        }
        n.alive = false;
    }

    void set_gate(int idx, const Gate& g) { nodes_[idx].gate = g; }

    /// Reverses a CNOT in place; the per-qubit links move with their
    /// wires to the swapped slots.
    void flip_cnot(int idx) {
        Node& n = nodes_[idx];
        n.gate = Gate::cnot(n.gate.target(), n.gate.control());
        std::swap(n.prev[0], n.prev[1]);
        std::swap(n.next[0], n.next[1]);
    }

    std::vector<Gate> surviving_gates() const {
        std::vector<Gate> out;
        for (const Node& n : nodes_)
            if (n.alive) out.push_back(n.gate);
        return out;
    }

private:
    int slot_of(int idx, QubitId q) const {
        const Gate& g = nodes_[idx].gate;
        if (g.qubit(0) == q) return 0;
        return 1;
    }

    void slot_link(int from, QubitId q, int to) { nodes_[from].next[slot_of(from, q)] = to; }

    std::uint32_t num_qubits_;
    std::vector<Node> nodes_;
};

bool inverse_pair(const Gate& a, const Gate& b) {
    switch (a.kind()) {
        case GateKind::H: return b.kind() == GateKind::H;
        case GateKind::X: return b.kind() == GateKind::X;
        case GateKind::Z: return b.kind() == GateKind::Z;
        case GateKind::S: return b.kind() == GateKind::Sdg;
        case GateKind::Sdg: return b.kind() == GateKind::S;
        case GateKind::T: return b.kind() == GateKind::Tdg;
        case GateKind::Tdg: return b.kind() == GateKind::T;
        default: return false;
    }
}

bool try_cancel_inverse_pair(Wirework& w, int idx) {
    const Gate& g = w.gate(idx);
    if (g.kind() == GateKind::CNOT) {
        int na = w.next_on(idx, g.control());
        int nb = w.next_on(idx, g.target());
        if (na < 0 || na != nb) return false;
        const Gate& other = w.gate(na);
        if (other.kind() != GateKind::CNOT || other.control() != g.control() ||
            other.target() != g.target())
            return false;
        w.remove(na);
        w.remove(idx);
        return true;
    }
    if (g.kind() == GateKind::Rz) return false;  // rotations are handled by MergeRz
    int nx = w.next_on(idx, g.qubit(0));
    if (nx < 0) return false;
    const Gate& other = w.gate(nx);
    if (other.arity() != 1 || !inverse_pair(g, other)) return false;
    w.remove(nx);
    w.remove(idx);
    return true;
}

bool try_merge_rz(Wirework& w, int idx) {
    const Gate& g = w.gate(idx);
    if (g.kind() != GateKind::Rz) return false;
    int nx = w.next_on(idx, g.qubit(0));
    if (nx < 0 || w.gate(nx).kind() != GateKind::Rz) return false;
    double merged = reduce_angle(g.angle() + w.gate(nx).angle());
    w.remove(nx);
    if (angle_is_zero(merged)) {
        w.remove(idx);
    } else {
        w.set_gate(idx, Gate::rz(merged, g.qubit(0)));
    }
    return true;
}

bool is_h_on(const Wirework& w, int idx, QubitId q) {
    return idx >= 0 && w.gate(idx).kind() == GateKind::H && w.gate(idx).qubit(0) == q;
}

bool try_hadamard_cnot_flip(Wirework& w, int idx) {
    const Gate& g = w.gate(idx);
    if (g.kind() != GateKind::CNOT) return false;
    QubitId a = g.control(), b = g.target();
    int ha0 = w.prev_on(idx, a), hb0 = w.prev_on(idx, b);
    int ha1 = w.next_on(idx, a), hb1 = w.next_on(idx, b);
    if (!is_h_on(w, ha0, a) || !is_h_on(w, hb0, b) || !is_h_on(w, ha1, a) ||
        !is_h_on(w, hb1, b))
        return false;
    w.remove(ha0);
    w.remove(hb0);
    w.remove(ha1);
    w.remove(hb1);
    w.flip_cnot(idx);
    return true;
}

bool try_cnot_rz_cnot(Wirework& w, int idx) {
    const Gate& g = w.gate(idx);
    if (g.kind() != GateKind::CNOT) return false;
    QubitId a = g.control(), b = g.target();
    int rz = w.next_on(idx, a);
    if (rz < 0 || w.gate(rz).kind() != GateKind::Rz) return false;
    int second = w.next_on(rz, a);
    if (second < 0 || second != w.next_on(idx, b)) return false;
    const Gate& g2 = w.gate(second);
    if (g2.kind() != GateKind::CNOT || g2.control() != a || g2.target() != b) return false;
    w.remove(second);
    w.remove(idx);
    return true;
}

}  // namespace

Circuit rule_oracle_optimize(const Circuit& c, const RuleOracleConfig& cfg, const CostFn& f,
                             bool* hit_pass_cap) {
    (void)f;
    if (hit_pass_cap) *hit_pass_cap = false;
    Wirework w(c);
    const bool cancel = cfg.enabled_rules.count(RewriteRule::CancelInversePair) > 0;
    const bool merge = cfg.enabled_rules.count(RewriteRule::MergeRz) > 0;
    const bool flip = cfg.enabled_rules.count(RewriteRule::HadamardCnotFlip) > 0;
    const bool commute = cfg.enabled_rules.count(RewriteRule::CnotRzCnotCommute) > 0;

    bool changed = true;
    std::uint32_t passes = 0;
    while (changed) {
        if (passes++ >= cfg.max_passes) {
            if (hit_pass_cap) *hit_pass_cap = true;
            break;
        }
        changed = false;
        for (int idx = 0; idx < static_cast<int>(w.count()); ++idx) {
            if (!w.alive(idx)) continue;
            if (cancel && try_cancel_inverse_pair(w, idx)) {
                changed = true;
                continue;
            }
            if (!w.alive(idx)) continue;
            if (merge && try_merge_rz(w, idx)) {
                changed = true;
                continue;
            }
            if (!w.alive(idx)) continue;
            if (flip && try_hadamard_cnot_flip(w, idx)) {
                changed = true;
                continue;
            }
            if (!w.alive(idx)) continue;
            if (commute && try_cnot_rz_cnot(w, idx)) changed = true;
        }
    }
    auto gates = w.surviving_gates();
    return pack_layers(c.num_qubits(), gates);
}

Circuit RuleOracle::do_optimize(const Circuit& c) {
    bool capped = false;
    Circuit out = rule_oracle_optimize(c, cfg_, CostFn::gate_count(), &capped);
    if (capped) pass_cap_hits_.fetch_add(1, std::memory_order_relaxed);
    return out;
}

}  // namespace laqe
