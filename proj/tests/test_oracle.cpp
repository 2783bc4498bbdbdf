#include <doctest.h>

#include <random>

#include "laqe/oracle.hpp"
#include "laqe/random_circuit.hpp"
#include "laqe/verify.hpp"

using namespace laqe;

namespace {

// the two melded circuits of the seam-propagation example; see
// test_optimizer.cpp for the staged meld over them
Circuit propagate_left() {
    return Circuit(2, {Layer({Gate::cnot(1, 0)}), Layer({Gate::rz(0.3, 1)}),
                       Layer({Gate::h(0), Gate::h(1)})});
}

Circuit propagate_right() {
    return Circuit(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::h(0), Gate::h(1)}),
                       Layer({Gate::rz(0.5, 1)})});
}

}  // namespace

TEST_CASE("self-inverse pairs cancel to the empty circuit") {
    RuleOracle oracle;
    Circuit hh(1, {Layer({Gate::h(0)}), Layer({Gate::h(0)})});
    CHECK(oracle.optimize(hh).size() == 0);

    Circuit xx(2, {Layer({Gate::x(1)}), Layer({Gate::x(1)})});
    CHECK(oracle.optimize(xx).size() == 0);

    Circuit ssdg(1, {Layer({Gate::s(0)}), Layer({Gate::sdg(0)})});
    CHECK(oracle.optimize(ssdg).size() == 0);

    Circuit ttdg(1, {Layer({Gate::tdg(0)}), Layer({Gate::t(0)})});
    CHECK(oracle.optimize(ttdg).size() == 0);

    Circuit cxcx(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::cnot(0, 1)})});
    CHECK(oracle.optimize(cxcx).size() == 0);

    // flipped cnots are not inverses of each other
    Circuit cxflip(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::cnot(1, 0)})});
    CHECK(oracle.optimize(cxflip).size() == 2);

    // t t is a rotation, not an inverse pair
    Circuit tt(1, {Layer({Gate::t(0)}), Layer({Gate::t(0)})});
    CHECK(oracle.optimize(tt).size() == 2);
}

TEST_CASE("cancellation reaches across layer gaps on the same wire") {
    // the gates between the pair act on disjoint qubits
    Circuit c(3, {Layer({Gate::h(0), Gate::t(1)}), Layer({Gate::cnot(1, 2)}),
                  Layer({Gate::h(0), Gate::t(1)})});
    RuleOracle oracle;
    Circuit out = oracle.optimize(c);
    CHECK(out.size() == 3);  // both h gone, the rest untouched
    CHECK(equivalent(c, out, 1e-9));
}

TEST_CASE("rz gates merge and vanish at angle zero") {
    RuleOracle oracle;
    Circuit opp(1, {Layer({Gate::rz(0.3, 0)}), Layer({Gate::rz(-0.3, 0)})});
    CHECK(oracle.optimize(opp).size() == 0);

    Circuit sum(1, {Layer({Gate::rz(0.3, 0)}), Layer({Gate::rz(0.5, 0)})});
    Circuit merged = oracle.optimize(sum);
    REQUIRE(merged.size() == 1);
    CHECK(merged.flatten()[0] == Gate::rz(0.8, 0));

    // wrap past 2pi
    Circuit wrap(1, {Layer({Gate::rz(4.0, 0)}), Layer({Gate::rz(3.0, 0)})});
    Circuit wrapped = oracle.optimize(wrap);
    REQUIRE(wrapped.size() == 1);
    CHECK(wrapped.flatten()[0] == Gate::rz(7.0 - kTwoPi, 0));
}

TEST_CASE("hadamard-conjugated cnot flips") {
    RuleOracle oracle;
    Circuit c(2, {Layer({Gate::h(0), Gate::h(1)}), Layer({Gate::cnot(0, 1)}),
                  Layer({Gate::h(0), Gate::h(1)})});
    Circuit out = oracle.optimize(c);
    REQUIRE(out.size() == 1);
    CHECK(out.flatten()[0] == Gate::cnot(1, 0));
    CHECK(equivalent(c, out, 1e-9));
}

TEST_CASE("cnot pair with a rotation on the control collapses") {
    RuleOracle oracle;
    Circuit c(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::rz(0.7, 0)}),
                  Layer({Gate::cnot(0, 1)})});
    Circuit out = oracle.optimize(c);
    REQUIRE(out.size() == 1);
    CHECK(out.flatten()[0] == Gate::rz(0.7, 0));
    CHECK(equivalent(c, out, 1e-9));

    // a rotation on the target blocks the rule
    Circuit blocked(2, {Layer({Gate::cnot(0, 1)}), Layer({Gate::rz(0.7, 1)}),
                        Layer({Gate::cnot(0, 1)})});
    CHECK(oracle.optimize(blocked).size() == 3);
}

TEST_CASE("the seam super-segment drops seven gates in one call") {
    RuleOracle oracle;
    Circuit super = concat(propagate_left(), propagate_right());
    REQUIRE(super.size() == 8);
    Circuit out = oracle.optimize(super);
    CHECK(super.size() - out.size() == 7);
    REQUIRE(out.size() == 1);
    CHECK(out.flatten()[0] == Gate::rz(0.8, 1));
    CHECK(equivalent(super, out, 1e-9));
}

TEST_CASE("output is compacted, deterministic, and idempotent") {
    std::mt19937_64 rng(95);
    RuleOracle oracle;
    CostFn gates = CostFn::gate_count();
    for (int trial = 0; trial < 40; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);
        spec.num_gates = rng() % 80;
        spec.seed = rng();
        Circuit c = generate_random_circuit(spec);
        Circuit out1 = oracle.optimize(c);
        Circuit out2 = oracle.optimize(c);
        CHECK(out1 == out2);
        CHECK(is_compact(out1).holds);
        Circuit out3 = oracle.optimize(out1);
        CHECK(out3 == out1);  // full structural fixpoint, not just cost
        CHECK(out1.length() <= c.length());
    }
}

TEST_CASE("cost never increases under any built-in metric") {
    std::mt19937_64 rng(96);
    RuleOracle oracle;
    auto metrics = {CostFn::gate_count(), CostFn::t_count(), CostFn::cnot_count(),
                    CostFn::two_qubit_count(),
                    CostFn::weighted({{GateKind::H, 7}, {GateKind::Rz, 2}})};
    for (int trial = 0; trial < 40; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);
        spec.num_gates = rng() % 100;
        spec.seed = rng();
        Circuit c = generate_random_circuit(spec);
        Circuit out = oracle.optimize(c);
        for (const auto& m : metrics) CHECK(m.eval(out) <= m.eval(c));
    }
}

TEST_CASE("1000 random segments stay unitary-equivalent") {
    std::mt19937_64 rng(97);
    RuleOracle oracle;
    for (int trial = 0; trial < 1000; ++trial) {
        RandomCircuitSpec spec;
        spec.num_qubits = 2 + static_cast<std::uint32_t>(rng() % 5);  // up to 6
        spec.num_gates = 1 + rng() % 60;
        spec.seed = rng();
        Circuit c = generate_random_circuit(spec);
        Circuit out = oracle.optimize(c);
        CHECK(equivalent(c, out, 1e-9));
    }
}

TEST_CASE("disabled rules stay off") {
    RuleOracleConfig cfg;
    cfg.enabled_rules = {RewriteRule::MergeRz};
    RuleOracle oracle(cfg);
    Circuit hh(1, {Layer({Gate::h(0)}), Layer({Gate::h(0)})});
    CHECK(oracle.optimize(hh).size() == 2);
    Circuit rz(1, {Layer({Gate::rz(0.2, 0)}), Layer({Gate::rz(-0.2, 0)})});
    CHECK(oracle.optimize(rz).size() == 0);
}

TEST_CASE("call counter is monotone and resettable") {
    RuleOracle oracle;
    CHECK(oracle.call_count() == 0);
    oracle.optimize(Circuit(1));
    oracle.optimize(Circuit(1));
    CHECK(oracle.call_count() == 2);
    oracle.reset_call_count();
    CHECK(oracle.call_count() == 0);
}
