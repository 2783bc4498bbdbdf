#include "laqe/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace laqe {

namespace {

BenchSample run_one(std::size_t size, std::uint64_t seed, const BenchSweepConfig& cfg,
                    const CostFn& cost, Oracle& orc) {
    RandomCircuitSpec spec;
    spec.num_qubits = cfg.num_qubits;
    spec.num_gates = size;
    spec.seed = seed;
    Circuit input = generate_random_circuit(spec);

    auto [output, report] = oac_star(input, orc, cost, cfg.opt);
    (void)output;

    BenchSample s;
    s.circuit_size = input.size();
    s.circuit_length = input.length();
    s.num_qubits = cfg.num_qubits;
    s.seed = seed;
    s.oracle_calls = report.total_oracle_calls;
    s.delta = report.delta;
    s.rounds = report.rounds;
    s.wall_time_s = report.wall_time_s;
    for (const RoundStats& r : report.per_round) {
        double fraction = r.cost_before == 0
                              ? 0.0
                              : 1.0 - static_cast<double>(r.cost_after) /
                                          static_cast<double>(r.cost_before);
        s.round_fractions.push_back(fraction);
        // re-assert the segopt call bound on every collected round
        if (r.oracle_calls > r.length_before + 2 * (r.cost_before - r.cost_after))
            throw std::logic_error("bench sample violates the oracle-call bound");
    }
    return s;
}

}  // namespace

std::vector<BenchSample> run_bench_sweep(
    const BenchSweepConfig& cfg, const CostFn& cost,
    const std::function<std::unique_ptr<Oracle>()>& make_oracle) {
    struct Task {
        std::size_t size;
        std::uint64_t seed;
    };
    std::vector<Task> tasks;
    for (std::size_t size : cfg.sizes)
        for (std::uint64_t seed : cfg.seeds) tasks.push_back({size, seed});

    std::vector<BenchSample> samples(tasks.size());
    const int jobs = std::max(1, cfg.jobs);
    std::atomic<std::size_t> cursor{0};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mu;

    auto worker = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= tasks.size() || failed.load()) return;
            try {
                auto orc = make_oracle();
                samples[i] = run_one(tasks[i].size, tasks[i].seed, cfg, cost, *orc);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mu);
                failed.store(true);
                if (error.empty()) error = e.what();
                return;
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failed.load()) throw std::runtime_error("bench sweep failed: " + error);

    std::sort(samples.begin(), samples.end(), [](const BenchSample& a, const BenchSample& b) {
        if (a.circuit_size != b.circuit_size) return a.circuit_size < b.circuit_size;
        return a.seed < b.seed;
    });
    return samples;
}

void write_bench_csv(const std::vector<BenchSample>& samples, std::ostream& out) {
    out << "size,seed,qubits,length,oracle_calls,delta,rounds,wall_time_s,round_fractions\n";
    char buf[64];
    for (const BenchSample& s : samples) {
        out << s.circuit_size << ',' << s.seed << ',' << s.num_qubits << ','
            << s.circuit_length << ',' << s.oracle_calls << ',' << s.delta << ',' << s.rounds
            << ',';
        std::snprintf(buf, sizeof buf, "%.6f", s.wall_time_s);
        out << buf << ',';
        for (std::size_t i = 0; i < s.round_fractions.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.6f", s.round_fractions[i]);
            out << (i ? ";" : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace laqe
