#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "laqe/circuit.hpp"

namespace laqe {

/// Additive circuit cost: a non-negative integer per-gate weight summed
/// over the circuit. All built-in metrics are linear combinations of
/// per-kind gate counts, which makes them additive under concatenation
/// and under union of disjoint layers by construction.
class CostFn {
public:
    static CostFn gate_count();
    static CostFn t_count();
    static CostFn cnot_count();
    static CostFn two_qubit_count();
    static CostFn weighted(std::map<GateKind, std::uint64_t> weights);

    std::uint64_t weight(const Gate& g) const;
    std::uint64_t eval(const Layer& l) const;
    std::uint64_t eval(const Circuit& c) const;

    const std::string& name() const { return name_; }

private:
    CostFn(std::string name, std::map<GateKind, std::uint64_t> weights)
        : name_(std::move(name)), weights_(std::move(weights)) {}

    std::string name_;
    std::map<GateKind, std::uint64_t> weights_;  // missing kind = weight 0
};

/// Parses a CLI metric name: gates | t | cnot | twoq |
/// weighted:<kind>=<w>,...  Throws std::invalid_argument on bad input.
CostFn parse_metric(const std::string& text);

struct CostDelta {
    std::uint64_t before = 0;
    std::uint64_t after = 0;
    std::uint64_t improvement() const { return before - after; }
};

/// Executable form of the additivity definition. Checks, over the given
/// sample pairs, that (1) cost(C1;C2) = cost(C1) + cost(C2) and (2) for
/// qubit-disjoint layer pairs drawn from the samples,
/// cost(<L1 u L2>) = cost(<L1>) + cost(<L2>).
bool check_additivity(const std::function<std::uint64_t(const Circuit&)>& cost,
                      std::span<const std::pair<Circuit, Circuit>> samples);
bool check_additivity(const CostFn& cost,
                      std::span<const std::pair<Circuit, Circuit>> samples);

}  // namespace laqe
