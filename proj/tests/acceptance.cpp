// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure. Tolerances and bounds are pinned here, in code.

#include <cinttypes>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "laqe/bench.hpp"
#include "laqe/external_oracle.hpp"
#include "laqe/optimizer.hpp"
#include "laqe/random_circuit.hpp"
#include "laqe/rewrite.hpp"
#include "laqe/verify.hpp"

using namespace laqe;

namespace {

struct Checker {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Circuit propagate_left() {
    return Circuit(2, {Layer({Gate::cnot(1, 0)}), Layer({Gate::rz(0.3, 1)}),
                       Layer({Gate::h(0), Gate::h(1)})});
}

Circuit propagate_right() {
    return Circuit(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::h(0), Gate::h(1)}),
                       Layer({Gate::rz(0.5, 1)})});
}

Circuit padded_gap_circuit() {
    std::vector<Layer> layers;
    layers.push_back(Layer({Gate::t(0), Gate::t(1)}));
    layers.push_back(Layer({Gate::h(0), Gate::t(1)}));
    layers.push_back(Layer({Gate::x(0), Gate::t(1)}));
    layers.push_back(Layer({Gate::x(0), Gate::t(1)}));
    layers.push_back(Layer({Gate::h(0), Gate::t(1)}));
    for (int i = 0; i < 3; ++i) layers.push_back(Layer({Gate::t(1)}));
    return Circuit(2, std::move(layers));
}

std::size_t count_kind(const Circuit& c, GateKind k) {
    std::size_t n = 0;
    for (const Gate& g : c.flatten())
        if (g.kind() == k) ++n;
    return n;
}

// ---------------------------------------------------------------- 1
// Meld worked example: the seam propagation removes exactly 7 gates
// and preserves the unitary at 1e-9.
void criterion_meld_example(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    Circuit c1 = propagate_left();
    Circuit c2 = propagate_right();
    RuleOracle oracle;
    Circuit out = meld(c1, c2, oracle, gates, 2);
    ck.require(gates.eval(c1) + gates.eval(c2) - gates.eval(out) == 7,
               "meld must remove exactly 7 gates");
    ck.require(equivalent(concat(c1, c2), out, 1e-9), "meld output not equivalent");
}

// ---------------------------------------------------------------- 2
// Compaction-unlocks example: with omega 2, one segopt pass removes
// the x pair but not the h pair; oac removes all four over >= 2 rounds.
void criterion_compaction_unlocks(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    Circuit c = padded_gap_circuit();

    RuleOracle seg_oracle;
    Circuit seg = segopt(c, seg_oracle, gates, 2);
    ck.require(count_kind(seg, GateKind::X) == 0, "segopt must drop the x pair");
    ck.require(count_kind(seg, GateKind::H) == 2, "segopt must keep the h pair");

    RuleOracle oracle;
    OptimizerConfig cfg;
    cfg.omega = 2;
    cfg.epsilon = 0.0;
    auto [out, report] = oac(c, oracle, gates, cfg);
    ck.require(out.size() + 4 == c.size(), "oac must remove all 4 cancellable gates");
    ck.require(report.rounds >= 2, "oac must need at least 2 rounds");
    ck.require(equivalent(c, out, 1e-9), "oac output not equivalent");
}

// ---------------------------------------------------------------- 3
// Oracle-call bound: over >= 500 seeded circuits, segopt makes at most
// length(C) + 2*delta - 1 calls (omega >= 2, length >= 2). Exact.
void criterion_segopt_call_bound(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1003);
    const std::size_t omegas[] = {2, 3, 5, 8, 13, 40};
    int checked = 0;
    for (int i = 0; i < 520; ++i) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 7);
        spec.num_gates = 20 + rng() % 1981;
        spec.seed = rng();
        std::size_t omega = omegas[i % 6];
        Circuit c = generate_random_circuit(spec);
        if (c.length() < 2) continue;

        RuleOracle oracle;
        Circuit out = segopt(c, oracle, gates, omega);
        std::uint64_t delta = gates.eval(c) - gates.eval(out);
        if (oracle.call_count() > c.length() + 2 * delta - 1) {
            ck.require(false, "call bound violated at seed " + std::to_string(spec.seed) +
                                  " omega " + std::to_string(omega));
            return;
        }
        ++checked;
    }
    ck.require(checked >= 500, "need at least 500 checked circuits");
}

// ---------------------------------------------------------------- 4
// Meld call bound: over >= 500 segment-optimal pairs, at most
// 1 + 2*delta calls. Exact.  (Criterion 10 rides on the same pairs:
// cost(out) <= cost(c1) + cost(c2) exactly, and outputs are segment
// optimal.)
struct MeldSuiteResult {
    int pairs = 0;
    bool call_bound_ok = true;
    bool cost_ok = true;
    bool segment_optimal_ok = true;
};

MeldSuiteResult run_meld_suite() {
    MeldSuiteResult r;
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1004);
    for (int i = 0; i < 510; ++i) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 7);
        std::size_t omega = 2 + rng() % 5;
        spec.num_gates = 10 + rng() % 290;
        spec.seed = rng();
        RuleOracle prep;
        Circuit c1 = segopt(generate_random_circuit(spec), prep, gates, omega);
        spec.num_gates = 10 + rng() % 290;
        spec.seed = rng();
        Circuit c2 = segopt(generate_random_circuit(spec), prep, gates, omega);

        RuleOracle oracle;
        Circuit out = meld(c1, c2, oracle, gates, omega);
        const std::uint64_t before = gates.eval(c1) + gates.eval(c2);
        const std::uint64_t after = gates.eval(out);
        if (after > before) r.cost_ok = false;
        if (oracle.call_count() > 1 + 2 * (before - after)) r.call_bound_ok = false;
        if (i % 10 == 0) {  // the sliding-window judgment is the slow part
            RuleOracle fresh;
            if (!is_segment_optimal(out, fresh, gates, omega).holds)
                r.segment_optimal_ok = false;
        }
        ++r.pairs;
    }
    return r;
}

void criterion_meld_call_bound(Checker& ck, const MeldSuiteResult& r) {
    ck.require(r.pairs >= 500, "need at least 500 pairs");
    ck.require(r.call_bound_ok, "meld exceeded 1 + 2*delta calls");
}

// ---------------------------------------------------------------- 5
// Local optimality: every oac output passes is_locally_optimal and
// admits zero further rewrite steps.
void criterion_local_optimality(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1005);
    for (int i = 0; i < 120; ++i) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);
        spec.num_gates = 10 + rng() % 290;
        spec.seed = rng();
        std::size_t omega = 2 + rng() % 4;
        Circuit c = generate_random_circuit(spec);

        RuleOracle oracle;
        OptimizerConfig cfg;
        cfg.omega = omega;
        cfg.epsilon = 0.0;
        auto [out, report] = oac(c, oracle, gates, cfg);
        (void)report;

        RuleOracle fresh;
        if (!is_locally_optimal(out, fresh, gates, omega).holds) {
            ck.require(false, "oac output not locally optimal at seed " +
                                  std::to_string(spec.seed));
            return;
        }
        auto [again, trace] = saturate(out, fresh, gates, omega);
        if (!trace.empty() || again != out) {
            ck.require(false, "saturate found further steps at seed " +
                                  std::to_string(spec.seed));
            return;
        }
    }
}

// ---------------------------------------------------------------- 6
// Equivalence: every pass preserves the unitary within 1e-9 up to
// global phase on <= 8-qubit circuits.
void criterion_equivalence(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1006);
    for (std::uint32_t qubits = 2; qubits <= 8; ++qubits) {
        for (int rep = 0; rep < 3; ++rep) {
            RandomCircuitSpec spec;
            spec.num_qubits = qubits;
            spec.num_gates = 20 + rng() % 130;
            spec.seed = rng();
            std::size_t omega = 2 + rng() % 3;
            Circuit c = generate_random_circuit(spec);
            OptimizerConfig cfg;
            cfg.omega = omega;

            RuleOracle oracle;
            auto check = [&](const char* pass, const Circuit& out) {
                if (!equivalent(c, out, 1e-9))
                    ck.require(false, std::string(pass) + " broke equivalence at seed " +
                                          std::to_string(spec.seed));
            };

            check("compact", compact(c));
            check("rule-oracle", oracle.optimize(c));
            check("segopt", segopt(c, oracle, gates, omega));

            auto mid = static_cast<std::int64_t>(c.length() / 2);
            Circuit h1 = segopt(slice(c, {0, mid}), oracle, gates, omega);
            Circuit h2 = segopt(slice(c, {mid, static_cast<std::int64_t>(c.length())}),
                                oracle, gates, omega);
            check("meld", meld(h1, h2, oracle, gates, omega));

            cfg.epsilon = 0.0;
            check("oac", oac(c, oracle, gates, cfg).first);
            cfg.epsilon = 0.01;
            check("oac-star", oac_star(c, oracle, gates, cfg).first);

            if (c.size() <= 150) {
                check("saturate", saturate(c, oracle, gates, omega).first);
            }
            if (!ck.ok) return;
        }
    }
}

// ---------------------------------------------------------------- 7
// Termination potential: along every saturate trace, (cost, index sum)
// strictly decreases lexicographically, and every shift drops the
// index sum by exactly one. Zero violations.
void criterion_potential(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1007);
    for (int i = 0; i < 40; ++i) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);
        spec.num_gates = 10 + rng() % 190;
        spec.seed = rng();
        std::size_t omega = 2 + rng() % 3;
        Circuit c = generate_random_circuit(spec);

        RuleOracle oracle;
        auto [out, trace] = saturate(c, oracle, gates, omega);
        (void)out;
        for (const RewriteStep& s : trace) {
            Potential before{s.before_cost, s.before_index_sum};
            Potential after{s.after_cost, s.after_index_sum};
            if (!(after < before)) {
                ck.require(false, "potential did not decrease at seed " +
                                      std::to_string(spec.seed));
                return;
            }
            if (s.kind == RewriteStep::Kind::ShiftLeft &&
                (s.after_index_sum + 1 != s.before_index_sum ||
                 s.after_cost != s.before_cost)) {
                ck.require(false, "shift must keep cost and drop index sum by one");
                return;
            }
        }
    }
}

// ---------------------------------------------------------------- 8
// OAC* semantics across epsilon.
void criterion_oac_star(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    std::mt19937_64 rng(1008);
    for (int i = 0; i < 25; ++i) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);
        spec.num_gates = 20 + rng() % 280;
        spec.seed = rng();
        Circuit c = generate_random_circuit(spec);
        OptimizerConfig cfg;
        cfg.omega = 2 + rng() % 4;

        cfg.epsilon = 0.0;
        RuleOracle o1, o2;
        if (oac(c, o1, gates, cfg).first != oac_star(c, o2, gates, cfg).first) {
            ck.require(false, "epsilon 0 must reproduce oac gate for gate");
            return;
        }

        cfg.epsilon = 1.0;
        RuleOracle o3;
        auto [one, r1] = oac_star(c, o3, gates, cfg);
        if (r1.rounds != 1) {
            ck.require(false, "epsilon 1 must stop after one round");
            return;
        }
        RuleOracle fresh;
        if (!is_segment_optimal(one, fresh, gates, cfg.omega).holds) {
            ck.require(false, "epsilon 1 output must be segment optimal");
            return;
        }

        cfg.epsilon = 0.01;
        RuleOracle o4;
        auto [out, report] = oac_star(c, o4, gates, cfg);
        (void)out;
        const auto& last = report.per_round.back();
        if (last.cost_before > 0) {
            double fraction = 1.0 - static_cast<double>(last.cost_after) /
                                        static_cast<double>(last.cost_before);
            if (fraction > 0.01) {
                ck.require(false, "last round improved by more than epsilon");
                return;
            }
        }
    }
}

// ---------------------------------------------------------------- 9
// Linearity: total oracle calls grow by a factor in [1.5, 3.0] per
// size doubling on a fixed random family (omega 40).
void criterion_linearity(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    BenchSweepConfig cfg;
    cfg.sizes = {500, 1000, 2000, 4000, 8000};
    cfg.seeds = {11, 22, 33};
    cfg.num_qubits = 8;
    cfg.opt.omega = 40;
    cfg.opt.epsilon = 0.01;
    cfg.jobs = 2;
    auto samples = run_bench_sweep(cfg, gates, [] { return std::make_unique<RuleOracle>(); });

    std::vector<std::uint64_t> totals;
    for (std::size_t size : cfg.sizes) {
        std::uint64_t total = 0;
        for (const BenchSample& s : samples)
            if (s.circuit_size == size) total += s.oracle_calls;
        totals.push_back(total);
    }
    for (std::size_t i = 1; i < totals.size(); ++i) {
        double ratio = static_cast<double>(totals[i]) / static_cast<double>(totals[i - 1]);
        if (ratio < 1.5 || ratio > 3.0) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "growth %.2f per doubling at size %zu",
                          ratio, cfg.sizes[i]);
            ck.require(false, buf);
            return;
        }
    }
}

// ---------------------------------------------------------------- 10
void criterion_meld_cost_contract(Checker& ck, const MeldSuiteResult& r) {
    ck.require(r.cost_ok, "meld exceeded cost(c1) + cost(c2)");
    ck.require(r.segment_optimal_ok, "a meld output failed is_segment_optimal");
}

// ---------------------------------------------------------------- 11
// External-oracle protocol: an echoing stub behaves like a no-op
// oracle; a cost-raising stub triggers the flagged fallback and never
// leaks a costlier circuit.
void criterion_external_protocol(Checker& ck) {
    CostFn gates = CostFn::gate_count();
    RandomCircuitSpec spec;
    spec.num_qubits = 4;
    spec.num_gates = 120;
    spec.seed = 99;
    Circuit c = generate_random_circuit(spec);
    OptimizerConfig cfg;
    cfg.omega = 3;
    cfg.epsilon = 0.0;

    ExternalOracle echo({.command = "cat", .timeout_s = 20.0}, gates);
    auto [echo_out, echo_report] = oac(c, echo, gates, cfg);
    ck.require(gates.eval(echo_out) == gates.eval(c), "echo oracle must not change cost");
    ck.require(echo_report.delta == 0, "echo oracle delta must be zero");
    ck.require(echo.fallback_count() == 0, "echo oracle must not trip the fallback");
    ck.require(equivalent(c, echo_out, 1e-9), "echo pipeline broke equivalence");

    ExternalOracle worse({.command = "cat; echo 'h q[0];'; echo 'h q[0];'", .timeout_s = 20.0},
                         gates);
    auto [worse_out, worse_report] = oac(c, worse, gates, cfg);
    (void)worse_report;
    ck.require(gates.eval(worse_out) <= gates.eval(c),
               "a worsening oracle must never raise the emitted cost");
    ck.require(worse.fallback_count() > 0, "cost regression must be flagged");
    ck.require(equivalent(c, worse_out, 1e-9), "fallback pipeline broke equivalence");
}

}  // namespace

int main() {
    MeldSuiteResult meld_suite = run_meld_suite();

    struct Criterion {
        int id;
        const char* name;
        std::function<void(Checker&)> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "meld-worked-example", criterion_meld_example},
        {2, "compaction-unlocks", criterion_compaction_unlocks},
        {3, "segopt-call-bound", criterion_segopt_call_bound},
        {4, "meld-call-bound",
         [&](Checker& ck) { criterion_meld_call_bound(ck, meld_suite); }},
        {5, "local-optimality", criterion_local_optimality},
        {6, "pass-equivalence", criterion_equivalence},
        {7, "termination-potential", criterion_potential},
        {8, "oac-star-semantics", criterion_oac_star},
        {9, "oracle-call-linearity", criterion_linearity},
        {10, "meld-cost-contract",
         [&](Checker& ck) { criterion_meld_cost_contract(ck, meld_suite); }},
        {11, "external-oracle-protocol", criterion_external_protocol},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        Checker ck;
        try {
            c.run(ck);
        } catch (const std::exception& e) {
            ck.require(false, std::string("exception: ") + e.what());
        }
        if (ck.ok) {
            std::printf("PASS %2d %s\n", c.id, c.name);
        } else {
            std::printf("FAIL %2d %s: %s\n", c.id, c.name, ck.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures;
}
