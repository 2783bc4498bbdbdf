#include "laqe/rewrite.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace laqe {

std::uint64_t index_sum(const Circuit& c) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < c.length(); ++i)
        sum += static_cast<std::uint64_t>(i) * c.layer(i).size();
    return sum;
}

Potential potential(const Circuit& c, const CostFn& f) { return {f.eval(c), index_sum(c)}; }

void write_trace(const std::vector<RewriteStep>& steps, std::ostream& out) {
    for (const RewriteStep& s : steps) {
        if (s.kind == RewriteStep::Kind::Lopt) {
            out << "LOPT [" << s.range.start << "," << s.range.end << ") cost "
                << s.before_cost << "->" << s.after_cost << "\n";
        } else {
            out << "SHIFT layer " << s.range.start << " gate " << s.gate->str() << "\n";
        }
    }
}

std::optional<std::pair<Circuit, RewriteStep>> try_lopt(const Circuit& c, SegmentRange r,
                                                        Oracle& orc, const CostFn& f) {
    const auto len = static_cast<std::int64_t>(c.length());
    std::int64_t start = std::max<std::int64_t>(0, r.start);
    std::int64_t end = std::min<std::int64_t>(len, r.end);
    if (end < start) end = start;

    Circuit window = slice(c, {start, end});
    Circuit improved = orc.optimize(window);
    const std::uint64_t win_before = f.eval(window);
    const std::uint64_t win_after = f.eval(improved);
    if (win_after >= win_before) return std::nullopt;

    Circuit prefix = slice(c, {0, start});
    Circuit suffix = slice(c, {end, len});
    Circuit result = concat(concat(prefix, improved), suffix);

    RewriteStep step;
    step.kind = RewriteStep::Kind::Lopt;
    step.range = {start, end};
    // additivity: the window improvement is the circuit improvement
    step.before_cost = f.eval(c);
    step.after_cost = step.before_cost - (win_before - win_after);
    return std::make_pair(std::move(result), step);
}

std::optional<Circuit> try_shift_left(const Circuit& c, std::size_t layer_index, const Gate& g) {
    if (layer_index == 0 || layer_index >= c.length())
        throw std::out_of_range("shift-left layer index out of range");
    const Layer& src = c.layer(layer_index);
    if (std::find(src.begin(), src.end(), g) == src.end())
        throw std::invalid_argument("shift-left: gate not present in layer");
    const Layer& dst = c.layer(layer_index - 1);
    if (!dst.disjoint_from(g)) return std::nullopt;

    std::vector<Layer> layers = c.layers();
    layers[layer_index - 1].insert(g);
    layers[layer_index].remove(g);
    if (layers[layer_index].empty() && layer_index == layers.size() - 1)
        layers.pop_back();
    return Circuit(c.num_qubits(), std::move(layers));
}

namespace {

// One scheduling sweep: Lopt windows left to right, then ShiftLeft
// gates left to right. Returns the first applicable step, if any.
std::optional<std::pair<Circuit, RewriteStep>> find_step(const Circuit& c, Oracle& orc,
                                                         const CostFn& f, std::size_t omega) {
    const auto len = static_cast<std::int64_t>(c.length());
    const auto w = static_cast<std::int64_t>(omega);
    // Maximal windows suffice: a sub-window improvement is also an
    // improvement of its enclosing window (pattern oracles cannot lose
    // matches by enlarging a contiguous window).
    for (std::int64_t i = 0; i == 0 || i + w <= len; ++i) {
        auto hit = try_lopt(c, {i, i + w}, orc, f);
        if (hit) return hit;
        if (len <= w) break;
    }
    for (std::size_t li = 1; li < c.length(); ++li) {
        for (const Gate& g : c.layer(li)) {
            auto shifted = try_shift_left(c, li, g);
            if (!shifted) continue;
            RewriteStep step;
            step.kind = RewriteStep::Kind::ShiftLeft;
            step.range = {static_cast<std::int64_t>(li), static_cast<std::int64_t>(li) + 1};
            step.gate = g;
            return std::make_pair(std::move(*shifted), step);
        }
    }
    return std::nullopt;
}

}  // namespace

std::pair<Circuit, std::vector<RewriteStep>> saturate(const Circuit& c, Oracle& orc,
                                                      const CostFn& f, std::size_t omega) {
    if (omega < 1) throw std::invalid_argument("saturate needs omega >= 1");
    Circuit current = c;
    while (!current.empty() && current.layer(current.length() - 1).empty()) {
        std::vector<Layer> trimmed = current.layers();
        trimmed.pop_back();
        current = Circuit(current.num_qubits(), std::move(trimmed));
    }

    std::vector<RewriteStep> trace;
    for (;;) {
        auto step = find_step(current, orc, f, omega);
        if (!step) break;
        auto& [next, record] = *step;
        if (record.kind == RewriteStep::Kind::ShiftLeft) {
            record.before_cost = f.eval(current);
            record.after_cost = f.eval(next);
        }
        record.before_index_sum = index_sum(current);
        record.after_index_sum = index_sum(next);
        trace.push_back(record);
        current = std::move(next);
    }
    return {std::move(current), std::move(trace)};
}

}  // namespace laqe
