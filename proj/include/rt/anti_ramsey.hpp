#pragma once

// The general r(G,t) solver for arbitrary multigraphs:
//
//   * if some vertex partition P0 has fewer than t(|P0|-1) crossing edges,
//     the host has no t edge-disjoint spanning trees at all; the all-rainbow
//     coloring avoids and r(G,t) = |E(G)|.
//   * otherwise r(G,t) = max over partitions with |P| >= 3 of
//     |E(P,G)| + t(|P|-2).
//
// Hosts with n <= 2 that still pack t spanning trees have an empty
// maximization domain and no avoiding coloring; that outcome is reported
// distinctly instead of being conflated with a value.
//
// Edge colors on the input are ignored: r is a property of the uncolored
// host. Both partition scans are exhaustive, so the solver refuses vertex
// counts beyond the enumeration cap.

#include <optional>
#include <string>

#include "rt/graph.hpp"
#include "rt/partition_enum.hpp"

namespace rt {

struct PackingCheck {
    bool feasible = true;
    /// When infeasible: the partition with the largest deficit
    /// t(|P|-1) - |cr(P,G)|, canonically first among ties.
    std::optional<VertexPartition> violator;
};

/// Spanning-tree packing condition: true iff every partition P with
/// 2 <= |P| <= n has at least t(|P|-1) crossing edges, which is equivalent
/// to G having t edge-disjoint spanning trees.
inline PackingCheck packing_feasible(const ColoredMultigraph& g, int t, int jobs = 1,
                                     int cap = kDefaultPartitionCap) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (g.vertex_count() < 1) throw std::invalid_argument("packing check needs n >= 1");
    std::optional<PartitionMax> deficit = maximize_over_partitions(
        g.vertex_count(), 2, g.vertex_count(),
        [&](const VertexPartition& p) {
            return 1LL * t * (p.block_count() - 1) - crossing_count(g, p);
        },
        jobs, cap);
    PackingCheck check;
    if (deficit && deficit->score > 0) {
        check.feasible = false;
        check.violator = std::move(deficit->witness);
    }
    return check;
}

enum class GeneralBranch { PackingInfeasible, PartitionMax, NoAvoidingColoring };

inline const char* to_string(GeneralBranch b) {
    switch (b) {
        case GeneralBranch::PackingInfeasible: return "packing-infeasible";
        case GeneralBranch::PartitionMax: return "partition-max";
        case GeneralBranch::NoAvoidingColoring: return "no-avoiding-coloring";
    }
    return "?";
}

/// r(G,t) with the branch that produced it and a witnessing partition: the
/// packing violator P0, or the first maximizing partition with |P| >= 3 in
/// canonical order. NoAvoidingColoring carries neither value nor witness.
struct AntiRamseyResult {
    GeneralBranch branch = GeneralBranch::PartitionMax;
    long long value = -1;
    std::optional<VertexPartition> witness;
    int t = 0;

    bool has_value() const { return branch != GeneralBranch::NoAvoidingColoring; }
};

inline AntiRamseyResult r_general(const ColoredMultigraph& g, int t, int jobs = 1,
                                  int cap = kDefaultPartitionCap) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (g.vertex_count() < 1) throw std::invalid_argument("r_general needs n >= 1");

    PackingCheck packing = packing_feasible(g, t, jobs, cap);
    if (!packing.feasible)
        return {GeneralBranch::PackingInfeasible, g.edge_count(), std::move(packing.violator), t};
    if (g.vertex_count() <= 2) return {GeneralBranch::NoAvoidingColoring, -1, std::nullopt, t};

    std::optional<PartitionMax> best = maximize_over_partitions(
        g.vertex_count(), 3, g.vertex_count(),
        [&](const VertexPartition& p) {
            return 1LL * noncrossing_count(g, p) + 1LL * t * (p.block_count() - 2);
        },
        jobs, cap);
    return {GeneralBranch::PartitionMax, best->score, std::move(best->witness), t};
}

/// True iff some surjective k-coloring of G admits no t edge-disjoint rainbow
/// spanning trees, i.e. k <= r(G,t).
inline bool avoiding_coloring_exists(const ColoredMultigraph& g, int t, int k, int jobs = 1,
                                     int cap = kDefaultPartitionCap) {
    if (k < 1 || k > g.edge_count()) throw std::invalid_argument("k must be in [1, |E|]");
    AntiRamseyResult r = r_general(g, t, jobs, cap);
    return r.has_value() && k <= r.value;
}

}  // namespace rt
