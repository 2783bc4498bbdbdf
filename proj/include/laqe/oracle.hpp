#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "laqe/circuit.hpp"
#include "laqe/cost.hpp"

namespace laqe {

/// Raised when an oracle cannot produce a usable result (subprocess
/// failure, unparsable output, contract breakage, ...).
class OracleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Segment-optimizer contract. Implementations must return a circuit
/// that is functionally equivalent to the input, never costs more under
/// the configured cost function, is deterministic, and is a fixpoint of
/// their own optimization (oracle(oracle(c)) costs the same as
/// oracle(c)). Call counting lives here so built-in and external
/// oracles are accounted identically.
class Oracle {
public:
    virtual ~Oracle() = default;

    Circuit optimize(const Circuit& c) {
        calls_.fetch_add(1, std::memory_order_relaxed);
        return do_optimize(c);
    }

    std::uint64_t call_count() const { return calls_.load(std::memory_order_relaxed); }
    void reset_call_count() { calls_.store(0, std::memory_order_relaxed); }

    /// Largest input length (layers) the oracle accepts.
    virtual std::size_t max_input_length() const {
        return std::numeric_limits<std::size_t>::max();
    }

private:
    virtual Circuit do_optimize(const Circuit& c) = 0;

    std::atomic<std::uint64_t> calls_{0};
};

enum class RewriteRule : std::uint8_t {
    CancelInversePair,  // G . G^-1 adjacent in dependency order
    MergeRz,            // consecutive rotations on one qubit fuse
    HadamardCnotFlip,   // H,H . CNOT(a,b) . H,H  ->  CNOT(b,a)
    CnotRzCnotCommute,  // CNOT(a,b) . Rz(control) . CNOT(a,b)  ->  Rz
};

struct RuleOracleConfig {
    std::set<RewriteRule> enabled_rules = {
        RewriteRule::CancelInversePair,
        RewriteRule::MergeRz,
        RewriteRule::HadamardCnotFlip,
        RewriteRule::CnotRzCnotCommute,
    };
    /// Safety cap on rewrite sweeps; every rule strictly shrinks the
    /// gate count, so the fixpoint is reached long before a sane cap.
    std::uint32_t max_passes = 10000;
};

/// Built-in rule rewriter. Patterns match on the dependency order
/// induced by the layering (per-qubit adjacency), not on raw layer
/// adjacency, and run to a fixpoint; the result is compacted before
/// returning. Every rule deletes gates or reorients a CNOT, so the
/// cost contract holds for any non-negative per-kind weighting.
class RuleOracle final : public Oracle {
public:
    explicit RuleOracle(RuleOracleConfig cfg = {}) : cfg_(std::move(cfg)) {}

    const RuleOracleConfig& config() const { return cfg_; }

    /// True if some call since construction bailed out on max_passes.
    bool hit_pass_cap() const { return pass_cap_hits_.load(std::memory_order_relaxed) > 0; }
    std::uint64_t pass_cap_hits() const { return pass_cap_hits_.load(std::memory_order_relaxed); }

private:
    Circuit do_optimize(const Circuit& c) override;

    RuleOracleConfig cfg_;
    std::atomic<std::uint64_t> pass_cap_hits_{0};
};

/// Free-function form of the rule rewriter. The cost function is
/// accepted for contract symmetry with external oracles; the rule set
/// is non-increasing under every built-in metric, so it does not gate
/// rule application.
Circuit rule_oracle_optimize(const Circuit& c, const RuleOracleConfig& cfg, const CostFn& f,
                             bool* hit_pass_cap = nullptr);

}  // namespace laqe
