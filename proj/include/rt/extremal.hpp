#pragma once

// Constructions of avoiding colorings that realize the lower bounds:
//
//   * extremal_coloring: for a partition P with |P| >= 3, give t(|P|-2)-1
//     chosen crossing edges their own colors, pour every remaining crossing
//     edge into one shared color c0, and give each non-crossing edge a fresh
//     color. Any spanning tree crosses P at least |P|-1 times and can use c0
//     at most once, so t edge-disjoint rainbow spanning trees would need
//     t(|P|-2) distinct non-c0 crossing edges — one more than exist. The
//     result uses exactly |E(P,G)| + t(|P|-2) colors.
//   * rainbow_coloring: all edges distinct; avoids whenever the host cannot
//     pack t edge-disjoint spanning trees.

#include <string>
#include <vector>

#include "rt/graph.hpp"
#include "rt/rainbow.hpp"

namespace rt {

/// The avoiding coloring of the construction above. Requires
/// |cr(P,G)| >= t(|P|-2) so that the chosen edges exist and at least one
/// crossing edge remains for c0. Color ids: c0 = 0, the chosen crossing edges
/// get 1..t(|P|-2)-1 (lowest edge ids first), non-crossing colors follow.
inline ColoredMultigraph extremal_coloring(const ColoredMultigraph& g, int t,
                                           const VertexPartition& p) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    check_partition_matches(g, p);
    if (p.block_count() < 3)
        throw std::invalid_argument("extremal_coloring needs a partition with at least 3 blocks");

    auto [crossing, noncrossing] = classify_edges(g, p);
    long long chosen = 1LL * t * (p.block_count() - 2) - 1;
    if (static_cast<long long>(crossing.size()) < chosen + 1)
        throw std::invalid_argument("too few crossing edges: need |cr(P,G)| >= t(|P|-2)");

    std::vector<int> colors(static_cast<size_t>(g.edge_count()), 0);  // default: c0
    int next = 1;
    for (long long i = 0; i < chosen; ++i)
        colors[static_cast<size_t>(crossing[static_cast<size_t>(i)])] = next++;
    for (int id : noncrossing) colors[static_cast<size_t>(id)] = next++;
    return g.with_colors(colors, next);
}

/// All |E(G)| edges in distinct colors.
inline ColoredMultigraph rainbow_coloring(const ColoredMultigraph& g) {
    std::vector<int> colors(static_cast<size_t>(g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id) colors[static_cast<size_t>(id)] = id;
    return g.with_colors(colors, g.edge_count());
}

/// True iff the complete search proves the colored graph has no t
/// edge-disjoint rainbow spanning trees. Throws when the search budget runs
/// out before either answer.
inline bool certify_avoiding(const ColoredMultigraph& g, int t, const SearchLimits& limits = {}) {
    TreeSearchResult r = find_edge_disjoint_rainbow_trees(g, t, limits);
    if (r.status == SearchStatus::BudgetExceeded)
        throw BudgetExhausted("tree search exceeded " + std::to_string(limits.max_nodes) +
                              " nodes; avoidance undecided");
    return r.status == SearchStatus::Exhausted;
}

}  // namespace rt
