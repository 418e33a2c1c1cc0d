#pragma once

// Definition-level brute force for r(G,t): enumerate edge colorings as set
// partitions of the edge set (rainbow-tree existence is invariant under color
// renaming, so one representative per partition suffices) and report the
// maximum class count among colorings that admit no t edge-disjoint rainbow
// spanning trees.
//
// If some k-coloring avoids, merging two of its classes yields an avoiding
// (k-1)-coloring, so avoidance is downward closed in k. The scan therefore
// descends from k = |E| and stops at the first k with an avoiding coloring.

#include <optional>
#include <string>
#include <vector>

#include "rt/anti_ramsey.hpp"
#include "rt/errors.hpp"
#include "rt/extremal.hpp"
#include "rt/graph.hpp"
#include "rt/partition_enum.hpp"
#include "rt/rainbow.hpp"

namespace rt {

inline constexpr int kDefaultOracleEdgeCap = 10;

/// Streams one colored copy of `g` per set partition of its edge ids into
/// exactly k non-empty classes (class index = color id). Visitor may return
/// bool to stop early.
template <typename Visitor>
void enumerate_colorings(const ColoredMultigraph& g, int k, Visitor&& visit,
                         int edge_cap = kDefaultOracleEdgeCap) {
    int m = g.edge_count();
    if (m > edge_cap)
        throw CapExceeded("coloring enumeration over |E|=" + std::to_string(m) +
                          " exceeds the oracle cap " + std::to_string(edge_cap));
    if (k < 1 || k > m) throw std::invalid_argument("color class count out of range");
    PartitionEnumerator::run(m, k, k, [&](const VertexPartition& classes) {
        ColoredMultigraph colored = g.with_colors(classes.assignment(), k);
        if constexpr (std::is_void_v<decltype(visit(colored))>) {
            visit(colored);
            return true;
        } else {
            return visit(colored);
        }
    });
}

/// All colorings with any class count in [1, |E|].
template <typename Visitor>
void enumerate_all_colorings(const ColoredMultigraph& g, Visitor&& visit,
                             int edge_cap = kDefaultOracleEdgeCap) {
    for (int k = 1; k <= g.edge_count(); ++k)
        enumerate_colorings(g, k, visit, edge_cap);
}

/// Brute-force r(G,t). `value` is empty when every coloring (including
/// all-rainbow) contains t edge-disjoint rainbow spanning trees; otherwise it
/// is the maximum avoiding class count and `witness` an avoiding coloring
/// attaining it.
struct OracleResult {
    std::optional<long long> value;
    std::optional<ColoredMultigraph> witness;
    long long colorings_checked = 0;

    bool no_avoiding() const { return !value.has_value(); }
};

inline OracleResult r_oracle(const ColoredMultigraph& g, int t,
                             int edge_cap = kDefaultOracleEdgeCap,
                             const SearchLimits& limits = {}) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    int m = g.edge_count();
    if (m > edge_cap)
        throw CapExceeded("oracle over |E|=" + std::to_string(m) + " exceeds the cap " +
                          std::to_string(edge_cap));

    OracleResult result;

    // Packing feasibility does not depend on the coloring; hoisting it out
    // settles the r = |E| branch without touching any coloring.
    if (!packing_feasible(g, t).feasible) {
        result.value = m;
        result.witness = rainbow_coloring(g);
        return result;
    }

    for (int k = m; k >= 1; --k) {
        bool found = false;
        enumerate_colorings(
            g, k,
            [&](const ColoredMultigraph& colored) {
                ++result.colorings_checked;
                TreeSearchResult search = find_edge_disjoint_rainbow_trees(colored, t, limits);
                if (search.status == SearchStatus::BudgetExceeded)
                    throw BudgetExhausted("oracle tree search ran out of budget");
                if (search.status == SearchStatus::Exhausted) {
                    result.value = k;
                    result.witness = colored;
                    found = true;
                    return false;
                }
                return true;
            },
            edge_cap);
        if (found) return result;
    }
    return result;  // even one color per whole edge set admits the trees
}

}  // namespace rt
