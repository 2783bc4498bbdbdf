#include "laqe/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace laqe {

namespace {

bool min_qubit_less(const Gate& a, const Gate& b) { return a.min_qubit() < b.min_qubit(); }

}  // namespace

Layer::Layer(std::vector<Gate> gates) : gates_(std::move(gates)) {
    std::sort(gates_.begin(), gates_.end(), min_qubit_less);
    for (std::size_t i = 0; i < gates_.size(); ++i)
        for (std::size_t j = i + 1; j < gates_.size(); ++j)
            if (!gates_[i].disjoint_from(gates_[j]))
                throw std::invalid_argument("layer gates must act on disjoint qubits");
}

bool Layer::disjoint_from(const Gate& g) const {
    for (const Gate& mine : gates_)
        if (!mine.disjoint_from(g)) return false;
    return true;
}

bool Layer::disjoint_from(const Layer& other) const {
    for (const Gate& g : other.gates_)
        if (!disjoint_from(g)) return false;
    return true;
}

bool Layer::touches(QubitId q) const {
    for (const Gate& g : gates_)
        if (g.touches(q)) return true;
    return false;
}

void Layer::insert(const Gate& g) {
    if (!disjoint_from(g)) throw std::invalid_argument("layer qubit clash on insert");
    auto it = std::upper_bound(gates_.begin(), gates_.end(), g, min_qubit_less);
    gates_.insert(it, g);
}

bool Layer::remove(const Gate& g) {
    auto it = std::find(gates_.begin(), gates_.end(), g);
    if (it == gates_.end()) return false;
    gates_.erase(it);
    return true;
}

bool operator==(const Layer& a, const Layer& b) { return a.gates_ == b.gates_; }

Circuit::Circuit(std::uint32_t num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
}

Circuit::Circuit(std::uint32_t num_qubits, std::vector<Layer> layers)
    : num_qubits_(num_qubits), layers_(std::move(layers)) {
    if (num_qubits == 0) throw std::invalid_argument("circuit needs at least one qubit");
    validate();
}

void Circuit::validate() const {
    for (const Layer& l : layers_)
        for (const Gate& g : l)
            if (g.max_qubit() >= num_qubits_)
                throw std::out_of_range("gate qubit index exceeds circuit qubit count");
}

std::size_t Circuit::size() const {
    std::size_t n = 0;
    for (const Layer& l : layers_) n += l.size();
    return n;
}

bool Circuit::has_empty_layer() const {
    for (const Layer& l : layers_)
        if (l.empty()) return true;
    return false;
}

std::vector<Gate> Circuit::flatten() const {
    std::vector<Gate> out;
    out.reserve(size());
    for (const Layer& l : layers_)
        for (const Gate& g : l) out.push_back(g);
    return out;
}

bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_qubits_ == b.num_qubits_ && a.layers_ == b.layers_;
}

Circuit slice(const Circuit& c, SegmentRange r) {
    const auto len = static_cast<std::int64_t>(c.length());
    std::int64_t start = std::max<std::int64_t>(0, r.start);
    std::int64_t end = std::min<std::int64_t>(len, r.end);
    if (end < start) end = start;
    std::vector<Layer> layers(c.layers().begin() + start, c.layers().begin() + end);
    return Circuit(c.num_qubits(), std::move(layers));
}

Circuit concat(const Circuit& c1, const Circuit& c2) {
    if (c1.num_qubits() != c2.num_qubits())
        throw std::invalid_argument("concat: qubit-count mismatch");
    std::vector<Layer> layers;
    layers.reserve(c1.length() + c2.length());
    layers.insert(layers.end(), c1.layers().begin(), c1.layers().end());
    layers.insert(layers.end(), c2.layers().begin(), c2.layers().end());
    return Circuit(c1.num_qubits(), std::move(layers));
}

Circuit pack_layers(std::uint32_t num_qubits, std::span<const Gate> gates) {
    std::vector<Layer> layers;
    // frontier[q] = one past the last layer touching q
    std::vector<std::size_t> frontier(num_qubits, 0);
    for (const Gate& g : gates) {
        if (g.max_qubit() >= num_qubits)
            throw std::out_of_range("gate qubit index exceeds circuit qubit count");
        std::size_t at = frontier[g.qubit(0)];
        if (g.arity() == 2) at = std::max(at, frontier[g.qubit(1)]);
        if (at == layers.size()) layers.emplace_back();
        layers[at].insert(g);
        frontier[g.qubit(0)] = at + 1;
        if (g.arity() == 2) frontier[g.qubit(1)] = at + 1;
    }
    return Circuit(num_qubits, std::move(layers));
}

}  // namespace laqe
