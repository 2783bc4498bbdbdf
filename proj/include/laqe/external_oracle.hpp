#pragma once

#include <atomic>
#include <string>

#include "laqe/oracle.hpp"

namespace laqe {

struct ExternalOracleConfig {
    /// Command run via /bin/sh -c; receives QASM on stdin and must
    /// write QASM to stdout, exiting 0. Stderr is reserved for
    /// diagnostics and surfaced in error messages.
    std::string command;
    double timeout_s = 10.0;
};

/// Adapter for any QASM-speaking optimizer run as a subprocess. The
/// compatibility assumption (cost never increases) is enforced here:
/// if the subprocess returns a costlier circuit, the input is returned
/// instead and the regression is counted as a fallback.
class ExternalOracle final : public Oracle {
public:
    ExternalOracle(ExternalOracleConfig cfg, CostFn cost);

    std::uint64_t fallback_count() const {
        return fallbacks_.load(std::memory_order_relaxed);
    }

private:
    Circuit do_optimize(const Circuit& c) override;

    ExternalOracleConfig cfg_;
    CostFn cost_;
    std::atomic<std::uint64_t> fallbacks_{0};
};

/// One-shot form used by the adapter; exposed for direct protocol use.
Circuit external_oracle_optimize(const Circuit& c, const ExternalOracleConfig& cfg,
                                 const CostFn& f, bool* fell_back = nullptr);

namespace detail {

struct SubprocessResult {
    int exit_code = -1;
    std::string out;
    std::string err;
    bool timed_out = false;
};

/// Runs `command` via /bin/sh -c, feeding `input` on stdin and
/// collecting stdout/stderr until exit or timeout (then SIGKILL).
SubprocessResult run_subprocess(const std::string& command, const std::string& input,
                                double timeout_s);

}  // namespace detail

}  // namespace laqe
