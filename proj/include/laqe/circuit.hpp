#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "laqe/gate.hpp"

namespace laqe {

/// One time step: a set of gates acting on pairwise disjoint qubits.
/// Gates are kept sorted by lowest qubit index, which is a strict total
/// order within a layer because of disjointness.
class Layer {
public:
    Layer() = default;
    explicit Layer(std::vector<Gate> gates);

    bool empty() const { return gates_.empty(); }
    std::size_t size() const { return gates_.size(); }
    const std::vector<Gate>& gates() const { return gates_; }

    auto begin() const { return gates_.begin(); }
    auto end() const { return gates_.end(); }

    bool disjoint_from(const Gate& g) const;
    bool disjoint_from(const Layer& other) const;
    bool touches(QubitId q) const;

    /// Inserts a gate; throws std::invalid_argument on a qubit clash.
    void insert(const Gate& g);
    /// Removes the first gate equal to g; returns false if absent.
    bool remove(const Gate& g);

    friend bool operator==(const Layer& a, const Layer& b);
    friend bool operator!=(const Layer& a, const Layer& b) { return !(a == b); }

private:
    std::vector<Gate> gates_;
};

/// Clamped half-open layer range [start, end).
struct SegmentRange {
    std::int64_t start = 0;
    std::int64_t end = 0;
};

/// A layered circuit: an ordered sequence of layers over a fixed qubit
/// count. Circuits are immutable values after construction; all passes
/// produce new circuits.
class Circuit {
public:
    explicit Circuit(std::uint32_t num_qubits);
    Circuit(std::uint32_t num_qubits, std::vector<Layer> layers);

    std::uint32_t num_qubits() const { return num_qubits_; }

    /// Number of layers.
    std::size_t length() const { return layers_.size(); }
    /// Total number of gates.
    std::size_t size() const;

    const Layer& layer(std::size_t i) const { return layers_[i]; }
    const std::vector<Layer>& layers() const { return layers_; }
    bool empty() const { return layers_.empty(); }

    bool has_empty_layer() const;

    /// Gates flattened in layer order (within a layer, sorted by lowest
    /// qubit). This order is consistent with all per-qubit dependencies.
    std::vector<Gate> flatten() const;

    friend bool operator==(const Circuit& a, const Circuit& b);
    friend bool operator!=(const Circuit& a, const Circuit& b) { return !(a == b); }

private:
    std::uint32_t num_qubits_;
    std::vector<Layer> layers_;

    void validate() const;
};

/// Segment C[i:j] under the overflow rule: indices clamp to
/// [max(0,i), min(j, length)); an inverted range yields an empty circuit.
Circuit slice(const Circuit& c, SegmentRange r);

/// Layer-sequence concatenation; both circuits must share num_qubits.
Circuit concat(const Circuit& c1, const Circuit& c2);

/// Greedy left-packed layering of a dependency-ordered gate sequence:
/// each gate lands in the earliest layer after the last layer touching
/// any of its qubits. The result has no empty layers and satisfies the
/// compact judgment. Runs in O(#gates + #layers).
Circuit pack_layers(std::uint32_t num_qubits, std::span<const Gate> gates);

}  // namespace laqe
