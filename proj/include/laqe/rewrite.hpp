#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "laqe/circuit.hpp"
#include "laqe/cost.hpp"
#include "laqe/oracle.hpp"

namespace laqe {

/// Termination potential (cost, index sum), ordered lexicographically.
/// IndexSum(C) = sum_i i * |L_i| strictly drops on every gate shift.
struct Potential {
    std::uint64_t cost = 0;
    std::uint64_t index_sum = 0;

    friend bool operator==(const Potential& a, const Potential& b) {
        return a.cost == b.cost && a.index_sum == b.index_sum;
    }
    friend bool operator<(const Potential& a, const Potential& b) {
        return a.cost < b.cost || (a.cost == b.cost && a.index_sum < b.index_sum);
    }
};

Potential potential(const Circuit& c, const CostFn& f);
std::uint64_t index_sum(const Circuit& c);

/// One rewrite step, for audit trails and the termination checks.
struct RewriteStep {
    enum class Kind { Lopt, ShiftLeft };
    Kind kind;
    // Lopt: the optimized window. ShiftLeft: [layer_index, layer_index+1).
    SegmentRange range{};
    std::optional<Gate> gate;  // ShiftLeft only
    std::uint64_t before_cost = 0;
    std::uint64_t after_cost = 0;
    std::uint64_t before_index_sum = 0;
    std::uint64_t after_index_sum = 0;
};

/// Serializes steps as "LOPT [i,j) cost a->b" / "SHIFT layer k gate <desc>".
void write_trace(const std::vector<RewriteStep>& steps, std::ostream& out);

/// Rule Lopt: feeds the clamped window (length <= omega required) to the
/// oracle; on a strict cost improvement returns prefix ; oracle(window) ;
/// suffix, otherwise nothing.
std::optional<std::pair<Circuit, RewriteStep>> try_lopt(const Circuit& c, SegmentRange r,
                                                        Oracle& orc, const CostFn& f);

/// Rule ShiftLeft: moves g from layer layer_index into the preceding
/// layer when that layer is qubit-disjoint from g. If the source layer
/// empties and is the trailing layer it is dropped, which keeps the
/// index sum decrease at exactly one. Throws if g is not in the layer.
std::optional<Circuit> try_shift_left(const Circuit& c, std::size_t layer_index, const Gate& g);

/// Naive saturating rewriter: applies Lopt over every clamped window and
/// ShiftLeft over every gate until neither applies. Quadratic search; it
/// exists as a test oracle for the fast optimizer, not a production
/// path. Trailing empty layers in the input are dropped up front.
std::pair<Circuit, std::vector<RewriteStep>> saturate(const Circuit& c, Oracle& orc,
                                                      const CostFn& f, std::size_t omega);

}  // namespace laqe
