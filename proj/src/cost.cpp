#include "laqe/cost.hpp"

#include <stdexcept>

namespace laqe {

CostFn CostFn::gate_count() {
    std::map<GateKind, std::uint64_t> w;
    for (auto k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg,
                   GateKind::T, GateKind::Tdg, GateKind::Rz, GateKind::CNOT})
        w[k] = 1;
    return CostFn("gates", std::move(w));
}

CostFn CostFn::t_count() {
    return CostFn("t", {{GateKind::T, 1}, {GateKind::Tdg, 1}});
}

CostFn CostFn::cnot_count() { return CostFn("cnot", {{GateKind::CNOT, 1}}); }

CostFn CostFn::two_qubit_count() {
    std::map<GateKind, std::uint64_t> w;
    for (auto k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg,
                   GateKind::T, GateKind::Tdg, GateKind::Rz, GateKind::CNOT})
        if (is_two_qubit(k)) w[k] = 1;
    return CostFn("twoq", std::move(w));
}

CostFn CostFn::weighted(std::map<GateKind, std::uint64_t> weights) {
    return CostFn("weighted", std::move(weights));
}

std::uint64_t CostFn::weight(const Gate& g) const {
    auto it = weights_.find(g.kind());
    return it == weights_.end() ? 0 : it->second;
}

std::uint64_t CostFn::eval(const Layer& l) const {
    std::uint64_t total = 0;
    for (const Gate& g : l) total += weight(g);
    return total;
}

std::uint64_t CostFn::eval(const Circuit& c) const {
    std::uint64_t total = 0;
    for (const Layer& l : c.layers()) total += eval(l);
    return total;
}

CostFn parse_metric(const std::string& text) {
    if (text == "gates") return CostFn::gate_count();
    if (text == "t") return CostFn::t_count();
    if (text == "cnot") return CostFn::cnot_count();
    if (text == "twoq") return CostFn::two_qubit_count();
    if (text.rfind("weighted:", 0) == 0) {
        std::map<GateKind, std::uint64_t> weights;
        std::string body = text.substr(9);
        std::size_t pos = 0;
        while (pos < body.size()) {
            std::size_t comma = body.find(',', pos);
            std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("weighted metric item needs <kind>=<w>: " + item);
            std::string kind = item.substr(0, eq);
            std::uint64_t w = std::stoull(item.substr(eq + 1));
            bool found = false;
            for (auto k : {GateKind::H, GateKind::X, GateKind::Z, GateKind::S, GateKind::Sdg,
                           GateKind::T, GateKind::Tdg, GateKind::Rz, GateKind::CNOT}) {
                if (kind == gate_name(k)) {
                    weights[k] = w;
                    found = true;
                    break;
                }
            }
            if (!found) throw std::invalid_argument("unknown gate kind in metric: " + kind);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (weights.empty()) throw std::invalid_argument("weighted metric needs at least one kind");
        return CostFn::weighted(std::move(weights));
    }
    throw std::invalid_argument("unknown metric '" + text +
                                "' (expected gates|t|cnot|twoq|weighted:...)");
}

bool check_additivity(const std::function<std::uint64_t(const Circuit&)>& cost,
                      std::span<const std::pair<Circuit, Circuit>> samples) {
    for (const auto& [c1, c2] : samples) {
        if (c1.num_qubits() != c2.num_qubits()) continue;
        // condition (1): concatenation
        if (cost(concat(c1, c2)) != cost(c1) + cost(c2)) return false;
        // condition (2): union of disjoint layers, drawn pairwise from the samples
        for (const Layer& l1 : c1.layers()) {
            for (const Layer& l2 : c2.layers()) {
                if (!l1.disjoint_from(l2)) continue;
                std::vector<Gate> merged;
                for (const Gate& g : l1) merged.push_back(g);
                for (const Gate& g : l2) merged.push_back(g);
                Circuit u(c1.num_qubits(), {Layer(std::move(merged))});
                Circuit a(c1.num_qubits(), {l1});
                Circuit b(c1.num_qubits(), {l2});
                if (cost(u) != cost(a) + cost(b)) return false;
            }
        }
    }
    return true;
}

bool check_additivity(const CostFn& cost,
                      std::span<const std::pair<Circuit, Circuit>> samples) {
    return check_additivity([&cost](const Circuit& c) { return cost.eval(c); }, samples);
}

}  // namespace laqe
