#pragma once

// Seeded random instance generators used by `rt verify` and the test suites.
// All draws go through rng_below() on a fixed-width engine, so a seed fully
// determines the instance stream across platforms and standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "rt/graph.hpp"
#include "rt/rainbow.hpp"

namespace rt {

using Rng = std::mt19937_64;

/// Uniform draw from [0, bound) by rejection; avoids the
/// implementation-defined std::uniform_int_distribution.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

inline bool rng_chance(Rng& rng, double p) {
    return static_cast<double>(rng_below(rng, 1u << 20)) < p * static_cast<double>(1u << 20);
}

/// Erdos-Renyi simple graph: each of the C(n,2) pairs kept with probability p.
inline ColoredMultigraph erdos_renyi(Rng& rng, int n, double p) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng_chance(rng, p)) edges.push_back(Edge{u, v, -1});
    return ColoredMultigraph(n, std::move(edges), 0);
}

/// Multigraph with m edges drawn uniformly over ordered pairs (loops
/// excluded, parallels allowed). Needs n >= 2 when m > 0.
inline ColoredMultigraph random_multigraph(Rng& rng, int n, int m) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        int u = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        edges.push_back(Edge{u, v, -1});
    }
    return ColoredMultigraph(n, std::move(edges), 0);
}

/// Uniform coloring with k classes, then compression of the ids actually
/// used so the palette stays dense (the number of used colors may be < k).
inline ColoredMultigraph random_coloring(Rng& rng, const ColoredMultigraph& g, int k) {
    std::vector<int> raw(static_cast<size_t>(g.edge_count()));
    for (int& c : raw) c = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(k)));
    std::vector<int> remap(static_cast<size_t>(k), -1);
    int next = 0;
    for (int& c : raw) {
        if (remap[static_cast<size_t>(c)] < 0) remap[static_cast<size_t>(c)] = next++;
        c = remap[static_cast<size_t>(c)];
    }
    return g.with_colors(raw, next);
}

/// Surjective coloring with exactly k classes (requires k <= |E|): one edge
/// pinned per class, the rest uniform.
inline ColoredMultigraph random_surjective_coloring(Rng& rng, const ColoredMultigraph& g, int k) {
    int m = g.edge_count();
    if (k < 1 || k > m) throw std::invalid_argument("class count out of range");
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    for (int i = m - 1; i > 0; --i)
        std::swap(order[static_cast<size_t>(i)],
                  order[rng_below(rng, static_cast<std::uint64_t>(i + 1))]);
    std::vector<int> raw(static_cast<size_t>(m));
    for (int c = 0; c < k; ++c) raw[static_cast<size_t>(order[static_cast<size_t>(c)])] = c;
    for (int i = k; i < m; ++i)
        raw[static_cast<size_t>(order[static_cast<size_t>(i)])] =
            static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(k)));
    return g.with_colors(raw, k);
}

/// Random valid forest family over a colored host: t forests grown greedily
/// from a shuffled edge order, respecting disjointness, acyclicity and
/// per-forest rainbowness.
inline ForestFamily random_forest_family(Rng& rng, const ColoredMultigraph& g, int t,
                                         double keep_probability = 0.5) {
    ForestFamily family;
    family.forests.assign(static_cast<size_t>(t), {});
    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    for (int i = 0; i < t; ++i) {
        detail::Dsu dsu(g.vertex_count());
        std::vector<char> colors(static_cast<size_t>(g.color_count()), 0);
        std::vector<int> order(static_cast<size_t>(g.edge_count()));
        for (int id = 0; id < g.edge_count(); ++id) order[static_cast<size_t>(id)] = id;
        for (int j = g.edge_count() - 1; j > 0; --j)
            std::swap(order[static_cast<size_t>(j)],
                      order[rng_below(rng, static_cast<std::uint64_t>(j + 1))]);
        for (int id : order) {
            if (used[static_cast<size_t>(id)]) continue;
            const Edge& e = g.edge(id);
            if (colors[static_cast<size_t>(e.color)]) continue;
            if (dsu.find(e.u) == dsu.find(e.v)) continue;
            if (!rng_chance(rng, keep_probability)) continue;
            dsu.unite(e.u, e.v);
            colors[static_cast<size_t>(e.color)] = 1;
            used[static_cast<size_t>(id)] = 1;
            family.forests[static_cast<size_t>(i)].push_back(id);
        }
        std::sort(family.forests[static_cast<size_t>(i)].begin(),
                  family.forests[static_cast<size_t>(i)].end());
    }
    return family;
}

}  // namespace rt
