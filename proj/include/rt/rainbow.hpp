#pragma once

// Rainbow spanning structure deciders for an edge-colored multigraph:
//
//   * has_color_disjoint_trees  — partition criterion for t pairwise
//     color-disjoint rainbow spanning trees: every vertex partition P must
//     see at least t(|P|-1) distinct colors on its crossing edges.
//   * extension_feasible        — criterion for extending t edge-disjoint
//     rainbow spanning forests to t edge-disjoint rainbow spanning trees
//     using fresh, pairwise distinct colors:
//     |c(cr(P,G'))| + sum_i |cr(P,F_i)| >= t(|P|-1) for every P, where G'
//     drops every edge whose color appears in the forests.
//   * find_*_trees / find_color_disjoint_extension — complete backtracking
//     searches for the same objects, built from the definitions. They serve
//     as the independent route the criteria are tested against, and as the
//     ground-truth check for generated colorings.
//   * seed_forests              — greedy distribution of repeated-color edges
//     into t forests, by decreasing color multiplicity.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rt/errors.hpp"
#include "rt/graph.hpp"
#include "rt/partition_enum.hpp"

namespace rt {

/// t forests over a shared host graph, stored as edge-id sets.
struct ForestFamily {
    std::vector<std::vector<int>> forests;

    int t() const { return static_cast<int>(forests.size()); }

    int edge_total() const {
        int total = 0;
        for (const std::vector<int>& f : forests) total += static_cast<int>(f.size());
        return total;
    }
};

/// Distinct colors appearing across the whole family.
inline std::vector<int> family_colors(const ColoredMultigraph& g, const ForestFamily& family) {
    std::vector<char> seen(static_cast<size_t>(g.color_count()), 0);
    std::vector<int> out;
    for (const std::vector<int>& f : family.forests)
        for (int id : f) {
            int c = g.edge(id).color;
            if (c >= 0 && !seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                out.push_back(c);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

/// Validates the family invariants: edge ids in range, forests pairwise
/// edge-disjoint, each forest acyclic and rainbow (no color repeats inside a
/// forest). Colors shared across different forests are fine — that is the
/// setting the seeding procedure produces.
inline void validate_forest_family(const ColoredMultigraph& g, const ForestFamily& family) {
    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    for (const std::vector<int>& f : family.forests) {
        detail::Dsu dsu(g.vertex_count());
        std::vector<char> colors(static_cast<size_t>(g.color_count()), 0);
        for (int id : f) {
            if (id < 0 || id >= g.edge_count())
                throw std::invalid_argument("forest edge id out of range");
            if (used[static_cast<size_t>(id)])
                throw std::invalid_argument("forests are not edge-disjoint");
            used[static_cast<size_t>(id)] = 1;
            const Edge& e = g.edge(id);
            if (e.color < 0) throw std::invalid_argument("forest edge is uncolored");
            if (colors[static_cast<size_t>(e.color)])
                throw std::invalid_argument("forest repeats a color");
            colors[static_cast<size_t>(e.color)] = 1;
            if (!dsu.unite(e.u, e.v)) throw std::invalid_argument("forest contains a cycle");
        }
    }
}

/// Spanning subgraph of g keeping exactly the edges whose color does not
/// appear anywhere in the family. Edge ids are re-assigned densely.
inline ColoredMultigraph residual_graph(const ColoredMultigraph& g, const ForestFamily& family) {
    std::vector<char> blocked(static_cast<size_t>(g.color_count()), 0);
    for (int c : family_colors(g, family)) blocked[static_cast<size_t>(c)] = 1;
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (e.color < 0 || !blocked[static_cast<size_t>(e.color)]) kept.push_back(e);
    return ColoredMultigraph(g.vertex_count(), std::move(kept), g.color_count());
}

/// Result of a partition-criterion scan; `blocking` is the first violating
/// partition in canonical order when the criterion fails.
struct CriterionCheck {
    bool satisfied = true;
    std::optional<VertexPartition> blocking;
};

/// Partition criterion for t pairwise color-disjoint rainbow spanning trees.
inline CriterionCheck has_color_disjoint_trees(const ColoredMultigraph& g, int t,
                                               int cap = kDefaultPartitionCap) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    if (!g.fully_colored()) throw std::invalid_argument("criterion needs a fully colored graph");
    if (g.vertex_count() > cap)
        throw CapExceeded("partition scan over n=" + std::to_string(g.vertex_count()) +
                          " exceeds the exhaustive cap");
    CriterionCheck result;
    if (g.vertex_count() <= 1) return result;
    PartitionEnumerator::run(g.vertex_count(), 2, g.vertex_count(),
                             [&](const VertexPartition& p) {
                                 long long need = 1LL * t * (p.block_count() - 1);
                                 if (crossing_color_count(g, p) < need) {
                                     result.satisfied = false;
                                     result.blocking = p;
                                     return false;
                                 }
                                 return true;
                             });
    return result;
}

enum class ExtensionOutcome { Extendable, Blocked };

/// Certificate for the extension criterion; when Blocked, `lhs < rhs` at the
/// first violating partition in canonical order.
struct ExtensionCertificate {
    ExtensionOutcome outcome = ExtensionOutcome::Extendable;
    std::optional<VertexPartition> blocking_partition;
    long long lhs = 0;
    long long rhs = 0;
};

/// Decides whether the forest family extends to t edge-disjoint rainbow
/// spanning trees whose added edges all carry distinct colors unused by the
/// family.
inline ExtensionCertificate extension_feasible(const ColoredMultigraph& g,
                                               const ForestFamily& family,
                                               int cap = kDefaultPartitionCap) {
    if (!g.fully_colored()) throw std::invalid_argument("criterion needs a fully colored graph");
    validate_forest_family(g, family);
    if (g.vertex_count() > cap)
        throw CapExceeded("partition scan over n=" + std::to_string(g.vertex_count()) +
                          " exceeds the exhaustive cap");
    ExtensionCertificate cert;
    int n = g.vertex_count();
    if (n <= 1) return cert;

    ColoredMultigraph residual = residual_graph(g, family);
    int t = family.t();
    PartitionEnumerator::run(n, 2, n, [&](const VertexPartition& p) {
        long long lhs = crossing_color_count(residual, p);
        for (const std::vector<int>& f : family.forests)
            for (int id : f) {
                const Edge& e = g.edge(id);
                if (p.block_of(e.u) != p.block_of(e.v)) ++lhs;
            }
        long long rhs = 1LL * t * (p.block_count() - 1);
        if (lhs < rhs) {
            cert.outcome = ExtensionOutcome::Blocked;
            cert.blocking_partition = p;
            cert.lhs = lhs;
            cert.rhs = rhs;
            return false;
        }
        return true;
    });
    return cert;
}

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

/// Outcome of a complete backtracking search. `Exhausted` is a proof of
/// non-existence; `BudgetExceeded` is indeterminate.
struct TreeSearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    ForestFamily trees;
    long long nodes = 0;

    bool found() const { return status == SearchStatus::Found; }
};

struct SearchLimits {
    long long max_nodes = 100'000'000;
};

namespace detail {

// Backtracking over t spanning trees built one at a time, edges added in
// increasing id order within a tree. `global_colors` switches between
// per-tree rainbowness (edge-disjoint mode) and family-wide color
// disjointness (color-disjoint and extension modes).
class TreeSearch {
  public:
    TreeSearch(const ColoredMultigraph& g, int t, bool global_colors, const SearchLimits& limits)
        : g_(g),
          t_(t),
          global_colors_(global_colors),
          limits_(limits),
          edge_used_(static_cast<size_t>(g.edge_count()), 0),
          color_used_global_(static_cast<size_t>(g.color_count()), 0) {
        for (int i = 0; i < t_; ++i) {
            trees_.emplace_back(g_.vertex_count());
            tree_components_.push_back(g_.vertex_count());
            tree_colors_.emplace_back(static_cast<size_t>(g_.color_count()), 0);
            tree_edges_.emplace_back();
        }
        unused_edges_ = g_.edge_count();
    }

    // Pre-places forest edges for the extension mode; their colors become
    // globally blocked.
    void seed(const ForestFamily& family) {
        symmetric_ = false;
        for (int i = 0; i < t_; ++i) {
            for (int id : family.forests[static_cast<size_t>(i)]) {
                const Edge& e = g_.edge(id);
                trees_[static_cast<size_t>(i)].unite(e.u, e.v);
                --tree_components_[static_cast<size_t>(i)];
                edge_used_[static_cast<size_t>(id)] = 1;
                --unused_edges_;
                color_used_global_[static_cast<size_t>(e.color)] = 1;
                tree_edges_[static_cast<size_t>(i)].push_back(id);
            }
        }
    }

    TreeSearchResult run() {
        TreeSearchResult result;
        bool found = extend_tree(0, 0, first_slot_floor(0));
        result.nodes = nodes_;
        if (budget_hit_)
            result.status = SearchStatus::BudgetExceeded;
        else if (found) {
            result.status = SearchStatus::Found;
            result.trees.forests = tree_edges_;
            for (std::vector<int>& f : result.trees.forests) std::sort(f.begin(), f.end());
        }
        return result;
    }

  private:
    int first_slot_floor(int tree) const {
        // Empty-start trees are interchangeable; force strictly increasing
        // first-edge ids to enumerate each family once.
        if (!symmetric_ || tree == 0) return 0;
        const std::vector<int>& prev = tree_edges_[static_cast<size_t>(tree - 1)];
        return prev.empty() ? 0 : prev.front() + 1;
    }

    bool color_allowed(int tree, int color) const {
        return global_colors_ ? !color_used_global_[static_cast<size_t>(color)]
                              : !tree_colors_[static_cast<size_t>(tree)][static_cast<size_t>(color)];
    }

    // Usable edges must also connect two components of the current tree; the
    // increasing-id rule makes `lo` a hard floor for the rest of this tree.
    bool prune(int tree, int lo) {
        int comp = tree_components_[static_cast<size_t>(tree)];
        int needed_here = comp - 1;
        long long needed_total = needed_here;
        for (int j = tree + 1; j < t_; ++j)
            needed_total += tree_components_[static_cast<size_t>(j)] - 1;
        if (needed_total > unused_edges_) return true;

        // Contracted connectivity + distinct-color availability for the
        // current tree over its usable edge set.
        Dsu meta = trees_[static_cast<size_t>(tree)];
        int merges = 0;
        int fresh_colors = 0;
        std::vector<char> seen(static_cast<size_t>(g_.color_count()), 0);
        for (int id = lo; id < g_.edge_count(); ++id) {
            if (edge_used_[static_cast<size_t>(id)]) continue;
            const Edge& e = g_.edge(id);
            if (!color_allowed(tree, e.color)) continue;
            if (!seen[static_cast<size_t>(e.color)]) {
                seen[static_cast<size_t>(e.color)] = 1;
                ++fresh_colors;
            }
            if (meta.unite(e.u, e.v)) ++merges;
        }
        if (merges < needed_here) return true;       // tree cannot be completed
        if (fresh_colors < needed_here) return true; // not enough distinct colors
        return false;
    }

    bool extend_tree(int tree, int lo, int floor_id) {
        if (tree == t_) return true;
        if (tree_components_[static_cast<size_t>(tree)] == 1)
            return extend_tree(tree + 1, 0, first_slot_floor(tree + 1));

        if (budget_hit_) return false;
        if (prune(tree, std::max(lo, floor_id))) return false;

        for (int id = std::max(lo, floor_id); id < g_.edge_count(); ++id) {
            if (edge_used_[static_cast<size_t>(id)]) continue;
            const Edge& e = g_.edge(id);
            if (!color_allowed(tree, e.color)) continue;
            Dsu& dsu = trees_[static_cast<size_t>(tree)];
            if (dsu.find(e.u) == dsu.find(e.v)) continue;

            if (++nodes_ > limits_.max_nodes) {
                budget_hit_ = true;
                return false;
            }

            Dsu saved = dsu;  // component count is small; copy-restore is simplest
            dsu.unite(e.u, e.v);
            --tree_components_[static_cast<size_t>(tree)];
            edge_used_[static_cast<size_t>(id)] = 1;
            --unused_edges_;
            tree_colors_[static_cast<size_t>(tree)][static_cast<size_t>(e.color)] = 1;
            color_used_global_[static_cast<size_t>(e.color)] = 1;
            tree_edges_[static_cast<size_t>(tree)].push_back(id);

            if (extend_tree(tree, id + 1, floor_id)) return true;

            tree_edges_[static_cast<size_t>(tree)].pop_back();
            if (global_colors_) color_used_global_[static_cast<size_t>(e.color)] = 0;
            tree_colors_[static_cast<size_t>(tree)][static_cast<size_t>(e.color)] = 0;
            ++unused_edges_;
            edge_used_[static_cast<size_t>(id)] = 0;
            ++tree_components_[static_cast<size_t>(tree)];
            dsu = saved;
            if (budget_hit_) return false;
        }
        return false;
    }

    const ColoredMultigraph& g_;
    int t_;
    bool global_colors_;
    bool symmetric_ = true;
    SearchLimits limits_;
    std::vector<Dsu> trees_;
    std::vector<int> tree_components_;
    std::vector<std::vector<char>> tree_colors_;
    std::vector<std::vector<int>> tree_edges_;
    std::vector<char> edge_used_;
    std::vector<char> color_used_global_;
    int unused_edges_ = 0;
    long long nodes_ = 0;
    bool budget_hit_ = false;
};

inline void require_colored(const ColoredMultigraph& g) {
    if (!g.fully_colored()) throw std::invalid_argument("search needs a fully colored graph");
}

}  // namespace detail

/// Complete search for t pairwise edge-disjoint rainbow spanning trees
/// (colors may repeat across different trees). Exhausted is a proof of
/// non-existence.
inline TreeSearchResult find_edge_disjoint_rainbow_trees(const ColoredMultigraph& g, int t,
                                                         const SearchLimits& limits = {}) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    detail::require_colored(g);
    detail::TreeSearch search(g, t, /*global_colors=*/false, limits);
    return search.run();
}

/// Complete search for t pairwise color-disjoint rainbow spanning trees
/// (every color used by at most one tree). Independent of the partition
/// criterion in has_color_disjoint_trees.
inline TreeSearchResult find_color_disjoint_rainbow_trees(const ColoredMultigraph& g, int t,
                                                          const SearchLimits& limits = {}) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    detail::require_colored(g);
    detail::TreeSearch search(g, t, /*global_colors=*/true, limits);
    return search.run();
}

/// Complete search for a color-disjoint extension of the family into t
/// edge-disjoint rainbow spanning trees. Independent of extension_feasible.
inline TreeSearchResult find_color_disjoint_extension(const ColoredMultigraph& g,
                                                      const ForestFamily& family,
                                                      const SearchLimits& limits = {}) {
    detail::require_colored(g);
    validate_forest_family(g, family);
    detail::TreeSearch search(g, family.t(), /*global_colors=*/true, limits);
    search.seed(family);
    return search.run();
}

/// Greedy forest seeding from the repeated-color subgraph: colors of
/// multiplicity >= 2 are processed in decreasing multiplicity order.
///
/// If the most frequent color has multiplicity >= t, one of its edges goes
/// into each forest and seeding stops. Otherwise edges are dealt round-robin
/// (forest indices wrapping mod t) until the repeated-color edges run out or
/// every forest holds two edges. A placement that would repeat a color inside
/// a forest or pair up parallel edges skips ahead to the next forest.
inline ForestFamily seed_forests(const ColoredMultigraph& g, int t) {
    if (t < 1) throw std::invalid_argument("t must be positive");
    detail::require_colored(g);

    std::vector<int> multiplicity(static_cast<size_t>(g.color_count()), 0);
    for (const Edge& e : g.edges()) ++multiplicity[static_cast<size_t>(e.color)];
    std::vector<int> repeated;
    for (int c = 0; c < g.color_count(); ++c)
        if (multiplicity[static_cast<size_t>(c)] >= 2) repeated.push_back(c);
    if (repeated.empty())
        throw std::invalid_argument("seed_forests: no color has multiplicity >= 2");
    std::stable_sort(repeated.begin(), repeated.end(), [&](int a, int b) {
        return multiplicity[static_cast<size_t>(a)] > multiplicity[static_cast<size_t>(b)];
    });

    std::vector<std::vector<int>> edges_of_color(static_cast<size_t>(g.color_count()));
    for (int id = 0; id < g.edge_count(); ++id)
        edges_of_color[static_cast<size_t>(g.edge(id).color)].push_back(id);

    ForestFamily family;
    family.forests.assign(static_cast<size_t>(t), {});

    int top = repeated.front();
    if (multiplicity[static_cast<size_t>(top)] >= t) {
        for (int i = 0; i < t; ++i)
            family.forests[static_cast<size_t>(i)].push_back(
                edges_of_color[static_cast<size_t>(top)][static_cast<size_t>(i)]);
        return family;
    }

    auto forest_full = [&](int k) { return family.forests[static_cast<size_t>(k)].size() >= 2; };
    auto all_full = [&]() {
        for (int k = 0; k < t; ++k)
            if (!forest_full(k)) return false;
        return true;
    };
    auto accepts = [&](int k, int edge_id) {
        if (forest_full(k)) return false;
        const Edge& e = g.edge(edge_id);
        for (int other : family.forests[static_cast<size_t>(k)]) {
            const Edge& o = g.edge(other);
            if (o.color == e.color) return false;  // forest must stay rainbow
            bool parallel = (o.u == e.u && o.v == e.v) || (o.u == e.v && o.v == e.u);
            if (parallel) return false;  // two parallel edges close a cycle
        }
        return true;
    };

    int slot = 0;
    for (int color : repeated) {
        for (int edge_id : edges_of_color[static_cast<size_t>(color)]) {
            if (all_full()) return family;
            for (int attempt = 0; attempt < t; ++attempt) {
                int k = (slot + attempt) % t;
                if (accepts(k, edge_id)) {
                    family.forests[static_cast<size_t>(k)].push_back(edge_id);
                    slot = (k + 1) % t;
                    break;
                }
            }
        }
    }
    return family;
}

}  // namespace rt
