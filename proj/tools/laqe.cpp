#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "laqe/bench.hpp"
#include "laqe/external_oracle.hpp"
#include "laqe/log.hpp"
#include "laqe/optimizer.hpp"
#include "laqe/qasm.hpp"
#include "laqe/rewrite.hpp"
#include "laqe/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitOracleContract = 3;
constexpr int kExitVerifyInfeasible = 4;
constexpr int kExitVerifyFailed = 5;

constexpr std::uint32_t kDenseCheckQubits = 8;

struct OracleFlags {
    std::string spec = "rules";
    double timeout_s = 10.0;
};

std::unique_ptr<laqe::Oracle> make_oracle(const OracleFlags& flags, const laqe::CostFn& cost) {
    if (flags.spec == "rules") return std::make_unique<laqe::RuleOracle>();
    if (flags.spec.rfind("exec:", 0) == 0) {
        laqe::ExternalOracleConfig cfg;
        cfg.command = flags.spec.substr(5);
        cfg.timeout_s = flags.timeout_s;
        if (cfg.command.empty()) throw CLI::ValidationError("--oracle exec: needs a command");
        return std::make_unique<laqe::ExternalOracle>(cfg, cost);
    }
    throw CLI::ValidationError("--oracle must be 'rules' or 'exec:<command>'");
}

laqe::Circuit read_input(const std::string& path) {
    if (path == "-") return laqe::qasm::parse(std::cin);
    return laqe::qasm::parse_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << text;
}

int cmd_optimize(const std::string& input_path, const std::string& output_path,
                 const std::string& report_path, const std::string& trace_path,
                 const OracleFlags& oracle_flags, const std::string& metric,
                 std::size_t omega, double epsilon, bool self_check) {
    laqe::Circuit input = read_input(input_path);
    laqe::CostFn cost = laqe::parse_metric(metric);
    auto oracle = make_oracle(oracle_flags, cost);

    laqe::Circuit output(input.num_qubits());
    laqe::OptReport report;

    if (!trace_path.empty()) {
        // Audit path: the reference saturating rewriter with a step log.
        // Quadratic search; meant for small circuits.
        auto t0 = std::chrono::steady_clock::now();
        auto [result, steps] = laqe::saturate(input, *oracle, cost, omega);
        output = std::move(result);
        std::ostringstream trace;
        laqe::write_trace(steps, trace);
        write_text(trace_path, trace.str());
        report.rounds = 1;
        laqe::RoundStats stats;
        stats.cost_before = cost.eval(input);
        stats.cost_after = cost.eval(output);
        stats.length_before = input.length();
        stats.oracle_calls = oracle->call_count();
        report.per_round.push_back(stats);
        report.total_oracle_calls = oracle->call_count();
        report.delta = stats.cost_before - stats.cost_after;
        report.converged = true;
        report.wall_time_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    } else {
        laqe::OptimizerConfig cfg;
        cfg.omega = omega;
        cfg.epsilon = epsilon;
        std::tie(output, report) = laqe::oac_star(input, *oracle, cost, cfg);
    }

    if (self_check) {
        if (input.num_qubits() > kDenseCheckQubits) {
            std::cerr << "laqe: --self-check needs <= " << kDenseCheckQubits
                      << " qubits; rerun `laqe verify --randomized` instead\n";
            return kExitVerifyInfeasible;
        }
        if (!laqe::equivalent(input, output, 1e-9)) {
            std::cerr << "laqe: self-check FAILED: output is not equivalent to input\n";
            return kExitVerifyFailed;
        }
    }

    write_text(output_path, laqe::qasm::to_string(output));
    if (!report_path.empty()) {
        write_text(report_path, report.to_json() + "\n");
    } else if (output_path != "-") {
        write_text(output_path + ".report.json", report.to_json() + "\n");
    }
    return kExitOk;
}

int cmd_verify(const std::string& original_path, const std::string& optimized_path,
               const std::vector<std::string>& checks, const OracleFlags& oracle_flags,
               const std::string& metric, std::size_t omega, bool randomized, double tol,
               std::uint64_t seed) {
    laqe::Circuit original = read_input(original_path);
    laqe::Circuit optimized = read_input(optimized_path);
    if (original.num_qubits() != optimized.num_qubits()) {
        std::cerr << "laqe: qubit counts differ (" << original.num_qubits() << " vs "
                  << optimized.num_qubits() << ")\n";
        return kExitVerifyFailed;
    }
    laqe::CostFn cost = laqe::parse_metric(metric);
    auto oracle = make_oracle(oracle_flags, cost);

    bool all_pass = true;
    auto emit = [&](bool pass, const std::string& name, const std::string& detail) {
        std::cout << (pass ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " " << detail;
        std::cout << "\n";
        if (!pass) all_pass = false;
    };

    for (const std::string& check : checks) {
        if (check == "equiv") {
            if (original.num_qubits() <= kDenseCheckQubits && !randomized) {
                emit(laqe::equivalent(original, optimized, tol), "equivalent", "");
            } else if (original.num_qubits() <= laqe::kMaxSimQubits && randomized) {
                emit(laqe::equivalent_randomized(original, optimized, tol, 20, seed),
                     "equivalent-randomized", "(sound but incomplete)");
            } else if (randomized) {
                std::cerr << "laqe: equivalence checking is capped at " << laqe::kMaxSimQubits
                          << " qubits\n";
                return kExitVerifyInfeasible;
            } else {
                std::cerr << "laqe: dense equivalence is capped at " << kDenseCheckQubits
                          << " qubits; pass --randomized for up to " << laqe::kMaxSimQubits
                          << "\n";
                return kExitVerifyInfeasible;
            }
        } else if (check == "compact") {
            auto r = laqe::is_compact(optimized);
            emit(r.holds, "compact", r.holds ? "" : r.describe());
        } else if (check == "segment") {
            auto r = laqe::is_segment_optimal(optimized, *oracle, cost, omega);
            emit(r.holds, "segment-optimal", r.holds ? "" : r.describe());
        } else if (check == "local") {
            auto r = laqe::is_locally_optimal(optimized, *oracle, cost, omega);
            emit(r.holds, "locally-optimal", r.holds ? "" : r.describe());
        } else {
            throw CLI::ValidationError("--check must be equiv|compact|segment|local");
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

int cmd_stats(const std::string& input_path) {
    laqe::Circuit c = read_input(input_path);
    std::cout << "qubits " << c.num_qubits() << "\n";
    std::cout << "size " << c.size() << "\n";
    std::cout << "length " << c.length() << "\n";
    std::map<laqe::GateKind, std::size_t> counts;
    for (const laqe::Gate& g : c.flatten()) counts[g.kind()]++;
    for (const auto& [kind, count] : counts)
        std::cout << laqe::gate_name(kind) << " " << count << "\n";
    return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& sizes, const std::vector<std::uint64_t>& seeds,
              std::uint32_t qubits, const OracleFlags& oracle_flags, const std::string& metric,
              std::size_t omega, double epsilon, int jobs, const std::string& out_path) {
    laqe::CostFn cost = laqe::parse_metric(metric);
    laqe::BenchSweepConfig cfg;
    cfg.sizes = sizes;
    if (!seeds.empty()) cfg.seeds = seeds;
    cfg.num_qubits = qubits;
    cfg.opt.omega = omega;
    cfg.opt.epsilon = epsilon;
    cfg.jobs = jobs;

    auto samples = laqe::run_bench_sweep(
        cfg, cost, [&]() { return make_oracle(oracle_flags, cost); });
    std::ostringstream csv;
    laqe::write_bench_csv(samples, csv);
    write_text(out_path, csv.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"laqe: locally optimal quantum-circuit optimization"};
    app.require_subcommand(1);

    OracleFlags oracle_flags;
    std::string metric = "gates";
    std::size_t omega = 40;
    double epsilon = 0.01;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--oracle", oracle_flags.spec, "rules (default) or exec:<command>");
        cmd->add_option("--oracle-timeout", oracle_flags.timeout_s,
                        "external oracle timeout in seconds");
        cmd->add_option("--cost", metric, "gates|t|cnot|twoq|weighted:<kind>=<w>,...");
        cmd->add_option("--omega", omega, "segment length bound");
    };

    // optimize
    std::string in_path = "-", out_path = "-", report_path, trace_path;
    bool self_check = false;
    auto* optimize = app.add_subcommand("optimize", "optimize a QASM circuit");
    optimize->add_option("input", in_path, "input QASM path or -");
    optimize->add_option("-o,--output", out_path, "output QASM path or -");
    optimize->add_option("--report", report_path, "report JSON path or - (default: sidecar)");
    optimize->add_option("--trace", trace_path,
                         "run the reference saturating rewriter and write its step log here");
    optimize->add_option("--epsilon", epsilon, "convergence threshold in [0,1]");
    optimize->add_flag("--self-check", self_check, "verify equivalence after optimizing");
    add_common(optimize);

    // verify
    std::string original_path, optimized_path;
    std::vector<std::string> checks = {"equiv"};
    bool randomized = false;
    double tol = 1e-9;
    std::uint64_t seed = 1;
    auto* verify = app.add_subcommand("verify", "check equivalence and optimality judgments");
    verify->add_option("original", original_path, "original QASM path")->required();
    verify->add_option("optimized", optimized_path, "optimized QASM path")->required();
    verify->add_option("--check", checks, "equiv|compact|segment|local (repeatable)");
    verify->add_flag("--randomized", randomized, "statevector probing for 9-12 qubits");
    verify->add_option("--tol", tol, "equivalence tolerance");
    verify->add_option("--seed", seed, "seed for the randomized check");
    add_common(verify);

    // bench
    std::vector<std::size_t> sizes = {500, 1000, 2000, 4000, 8000};
    std::vector<std::uint64_t> seeds;
    std::uint32_t qubits = 8;
    int jobs = 1;
    std::string bench_out = "-";
    auto* bench = app.add_subcommand("bench", "seeded random-circuit sweep, CSV out");
    bench->add_option("--sizes", sizes, "gate counts to sweep")->delimiter(',');
    bench->add_option("--seed", seeds, "seeds (repeatable)")->delimiter(',');
    bench->add_option("--qubits", qubits, "qubit count for generated circuits");
    bench->add_option("--jobs", jobs, "worker threads");
    bench->add_option("--epsilon", epsilon, "convergence threshold in [0,1]");
    bench->add_option("-o,--output", bench_out, "CSV path or -");
    add_common(bench);

    // stats
    std::string stats_path = "-";
    auto* stats = app.add_subcommand("stats", "print size/length/per-kind counts");
    stats->add_option("input", stats_path, "input QASM path or -");

    CLI11_PARSE(app, argc, argv);

    try {
        if (optimize->parsed())
            return cmd_optimize(in_path, out_path, report_path, trace_path, oracle_flags,
                                metric, omega, epsilon, self_check);
        if (verify->parsed())
            return cmd_verify(original_path, optimized_path, checks, oracle_flags, metric,
                              omega, randomized, tol, seed);
        if (bench->parsed())
            return cmd_bench(sizes, seeds, qubits, oracle_flags, metric, omega, epsilon, jobs,
                             bench_out);
        if (stats->parsed()) return cmd_stats(stats_path);
    } catch (const laqe::qasm::ParseError& e) {
        std::cerr << "laqe: " << e.what() << "\n";
        return kExitParse;
    } catch (const laqe::OracleError& e) {
        std::cerr << "laqe: " << e.what() << "\n";
        return kExitOracleContract;
    } catch (const std::exception& e) {
        std::cerr << "laqe: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
