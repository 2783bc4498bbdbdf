#include "laqe/optimizer.hpp"

#include <chrono>

#include <nlohmann/json.hpp>

namespace laqe {

std::string OptReport::to_json() const {
    nlohmann::ordered_json j;
    j["rounds"] = rounds;
    j["per_round"] = nlohmann::ordered_json::array();
    for (const RoundStats& r : per_round) {
        j["per_round"].push_back({{"cost_before", r.cost_before},
                                  {"cost_after", r.cost_after},
                                  {"oracle_calls", r.oracle_calls}});
    }
    j["total_oracle_calls"] = total_oracle_calls;
    j["delta"] = delta;
    j["converged"] = converged;
    j["wall_time_s"] = wall_time_s;
    return j.dump(2);
}

Circuit compact(const Circuit& c) {
    auto gates = c.flatten();
    return pack_layers(c.num_qubits(), gates);
}

Circuit segopt(const Circuit& c, Oracle& orc, const CostFn& f, std::size_t omega) {
    if (omega < 1) throw std::invalid_argument("segopt needs omega >= 1");
    if (2 * omega > orc.max_input_length())
        throw std::invalid_argument("oracle does not accept segments of length 2*omega");
    if (c.length() <= 2 * omega) return orc.optimize(c);
    const auto mid = static_cast<std::int64_t>(c.length() / 2);
    Circuit left = segopt(slice(c, {0, mid}), orc, f, omega);
    Circuit right = segopt(slice(c, {mid, static_cast<std::int64_t>(c.length())}), orc, f, omega);
    return meld(left, right, orc, f, omega);
}

Circuit meld(const Circuit& c1, const Circuit& c2, Oracle& orc, const CostFn& f,
             std::size_t omega) {
    if (c1.num_qubits() != c2.num_qubits())
        throw std::invalid_argument("meld: qubit-count mismatch");
    // An empty side has no seam to optimize; the other side is already
    // segment optimal by the caller's obligation.
    if (c1.empty()) return c2;
    if (c2.empty()) return c1;

    const auto d1 = static_cast<std::int64_t>(c1.length());
    const auto d2 = static_cast<std::int64_t>(c2.length());
    const auto w = static_cast<std::int64_t>(omega);

    // Super segment spanning every omega-window that crosses the seam.
    Circuit window = concat(slice(c1, {d1 - w, d1}), slice(c2, {0, w}));
    Circuit improved = orc.optimize(window);
    const std::uint64_t before = f.eval(window);
    const std::uint64_t after = f.eval(improved);
    if (after > before) throw OracleError("oracle increased segment cost");
    if (after == before) return concat(c1, c2);

    // The improvement may ripple outwards; recurse with the optimized
    // seam in the middle. Both recursive inputs are cheaper than
    // (c1, c2), which bounds the total number of oracle calls.
    Circuit merged = meld(slice(c1, {0, d1 - w}), improved, orc, f, omega);
    return meld(merged, slice(c2, {w, d2}), orc, f, omega);
}

namespace {

std::pair<Circuit, OptReport> run_rounds(const Circuit& input, Oracle& orc, const CostFn& f,
                                         const OptimizerConfig& cfg, bool structural_stop) {
    if (cfg.epsilon < 0.0 || cfg.epsilon > 1.0)
        throw std::invalid_argument("epsilon must lie in [0, 1]");
    const auto t0 = std::chrono::steady_clock::now();

    OptReport report;
    Circuit current = input;
    for (;;) {
        if (report.rounds >= cfg.round_cap)
            throw RoundCapError("optimizer exceeded " + std::to_string(cfg.round_cap) +
                                " rounds; the oracle likely violates its contract");

        RoundStats stats;
        stats.cost_before = f.eval(current);
        stats.length_before = current.length();
        const std::uint64_t calls_before = orc.call_count();

        Circuit next = segopt(compact(current), orc, f, cfg.omega);

        stats.oracle_calls = orc.call_count() - calls_before;
        stats.cost_after = f.eval(next);
        report.per_round.push_back(stats);
        report.rounds += 1;
        report.total_oracle_calls += stats.oracle_calls;

        bool done;
        if (structural_stop) {
            done = (next == current);
        } else if (stats.cost_before == 0) {
            done = true;
        } else {
            const double fraction =
                1.0 - static_cast<double>(stats.cost_after) / static_cast<double>(stats.cost_before);
            done = fraction <= cfg.epsilon;
        }
        current = std::move(next);
        if (done) break;
    }

    report.delta = report.per_round.front().cost_before - report.per_round.back().cost_after;
    report.converged = true;
    report.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {std::move(current), std::move(report)};
}

}  // namespace

std::pair<Circuit, OptReport> oac(const Circuit& c, Oracle& orc, const CostFn& f,
                                  const OptimizerConfig& cfg) {
    return run_rounds(c, orc, f, cfg, /*structural_stop=*/true);
}

std::pair<Circuit, OptReport> oac_star(const Circuit& c, Oracle& orc, const CostFn& f,
                                       const OptimizerConfig& cfg) {
    // epsilon = 0 asks for local optimality, which needs the structural
    // convergence test; any positive epsilon stops on the cost fraction.
    return run_rounds(c, orc, f, cfg, /*structural_stop=*/cfg.epsilon == 0.0);
}

}  // namespace laqe
