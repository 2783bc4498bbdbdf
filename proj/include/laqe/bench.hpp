#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <vector>

#include "laqe/optimizer.hpp"
#include "laqe/random_circuit.hpp"

namespace laqe {

/// One seeded optimization run in a bench sweep.
struct BenchSample {
    std::size_t circuit_size = 0;
    std::size_t circuit_length = 0;
    std::uint32_t num_qubits = 0;
    std::uint64_t seed = 0;
    std::uint64_t oracle_calls = 0;
    std::uint64_t delta = 0;
    std::uint64_t rounds = 0;
    double wall_time_s = 0.0;
    /// Fractional cost improvement of each round, for rounds analysis.
    std::vector<double> round_fractions;
};

struct BenchSweepConfig {
    std::vector<std::size_t> sizes;
    std::vector<std::uint64_t> seeds = {1, 2, 3};
    std::uint32_t num_qubits = 8;
    OptimizerConfig opt;
    int jobs = 1;
};

/// Runs oac_star over the (size x seed) grid; samples may execute on a
/// worker pool (one oracle per worker task) and come back sorted by
/// (size, seed). Each sample is re-checked against the per-round call
/// bound oracle_calls <= length + 2*delta at collection time.
std::vector<BenchSample> run_bench_sweep(
    const BenchSweepConfig& cfg, const CostFn& cost,
    const std::function<std::unique_ptr<Oracle>()>& make_oracle);

/// Stable CSV schema:
/// size,seed,qubits,length,oracle_calls,delta,rounds,wall_time_s,round_fractions
void write_bench_csv(const std::vector<BenchSample>& samples, std::ostream& out);

}  // namespace laqe
