#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "laqe/circuit.hpp"
#include "laqe/cost.hpp"
#include "laqe/oracle.hpp"

namespace laqe {

struct OptimizerConfig {
    /// Maximum segment length considered for one local optimization.
    std::size_t omega = 40;
    /// Convergence threshold: a round improving the cost by a fraction
    /// <= epsilon stops the iteration. 0 demands local optimality.
    double epsilon = 0.01;
    /// Rounds allowed before concluding the oracle breaks its contract.
    std::size_t round_cap = 1000;
};

/// Raised when the round cap trips; a contract-violating oracle is
/// reported, never silently absorbed.
class RoundCapError : public OracleError {
public:
    using OracleError::OracleError;
};

struct RoundStats {
    std::uint64_t cost_before = 0;
    std::uint64_t cost_after = 0;
    std::uint64_t oracle_calls = 0;
    // kept for call-bound audits; not part of the serialized report
    std::uint64_t length_before = 0;
};

/// Per-run accounting for the round-based optimizers.
struct OptReport {
    std::uint64_t rounds = 0;
    std::vector<RoundStats> per_round;
    std::uint64_t total_oracle_calls = 0;
    std::uint64_t delta = 0;
    bool converged = false;
    double wall_time_s = 0.0;

    /// {rounds, per_round: [{cost_before, cost_after, oracle_calls}],
    ///  total_oracle_calls, delta, converged, wall_time_s}
    std::string to_json() const;
};

/// Removes the gaps an optimization round leaves behind: one left-to-
/// right pass that re-packs every gate into the earliest layer after
/// the previous gate on any of its qubits. Preserves the gate multiset,
/// the per-qubit order, every additive cost, and the unitary; output
/// satisfies the compact judgment. O(|C| + length(C)).
Circuit compact(const Circuit& c);

/// Divide-and-conquer segment optimization: pieces of length <= 2*omega
/// go to the oracle directly, longer circuits are split at the midpoint,
/// optimized recursively, and melded. Output is segment optimal; oracle
/// calls are bounded by length(C) + 2*delta.
Circuit segopt(const Circuit& c, Oracle& orc, const CostFn& f, std::size_t omega);

/// Joins two segment-optimal circuits into one, lazily: optimize the
/// super segment at the seam (last omega layers of c1 and first omega
/// of c2); on improvement splice it in and recurse outwards, otherwise
/// simply concatenate. At most 1 + 2*delta oracle calls.
Circuit meld(const Circuit& c1, const Circuit& c2, Oracle& orc, const CostFn& f,
             std::size_t omega);

/// Rounds of segopt(compact(C)) until the circuit stops changing
/// (structural equality); the fixpoint is locally optimal.
std::pair<Circuit, OptReport> oac(const Circuit& c, Oracle& orc, const CostFn& f,
                                  const OptimizerConfig& cfg);

/// Convergence-threshold variant: stops as soon as a round improves the
/// cost by a fraction <= epsilon (a zero-cost circuit counts as
/// converged). Output is segment optimal for every epsilon; epsilon = 0
/// reproduces oac exactly, including its structural convergence test.
std::pair<Circuit, OptReport> oac_star(const Circuit& c, Oracle& orc, const CostFn& f,
                                       const OptimizerConfig& cfg);

}  // namespace laqe
