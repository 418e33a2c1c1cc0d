#pragma once

// Edge-colored multigraphs, vertex partitions, and the crossing /
// non-crossing edge decomposition that all partition criteria are stated in.
//
// All types are immutable after construction and every operation here is a
// pure function, so (graph, partition) pairs can be evaluated concurrently.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rt {

/// One edge of a multigraph. Parallel edges are distinct entries in the edge
/// list; `color` is -1 for uncolored edges, otherwise an id in
/// [0, color_count) of the owning graph.
struct Edge {
    int u = 0;
    int v = 0;
    int color = -1;

    friend bool operator==(const Edge&, const Edge&) = default;
};

namespace detail {

// Small union-find used by connectivity checks and the tree searches.
struct Dsu {
    std::vector<int> parent;

    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    // Returns false if x and y were already in the same set.
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[x] = y;
        return true;
    }
};

}  // namespace detail

/// Vertex-labeled multigraph with an optional edge coloring.
///
/// Vertices are 0..n-1. Loops are rejected at construction: a loop can never
/// lie in a spanning tree and is non-crossing for every vertex partition, so
/// admitting them would only blur the edge counts downstream.
///
/// `color_count` is the size of the color palette; every colored edge carries
/// an id below it. The palette may contain ids not currently in use (e.g. in
/// subgraphs obtained by deleting edges); `used_color_count()` reports the
/// number of distinct ids that actually appear.
class ColoredMultigraph {
  public:
    ColoredMultigraph() = default;

    ColoredMultigraph(int vertex_count, std::vector<Edge> edges, int color_count = 0)
        : n_(vertex_count), colors_(color_count), edges_(std::move(edges)) {
        if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
        if (colors_ < 0) throw std::invalid_argument("color count must be non-negative");
        for (const Edge& e : edges_) {
            if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
                throw std::invalid_argument("edge endpoint out of range");
            if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
            if (e.color != -1 && (e.color < 0 || e.color >= colors_))
                throw std::invalid_argument("edge color out of range");
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int color_count() const { return colors_; }

    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool fully_colored() const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [](const Edge& e) { return e.color >= 0; });
    }

    /// Number of distinct color ids appearing on some edge.
    int used_color_count() const {
        std::vector<char> seen(static_cast<size_t>(colors_), 0);
        int count = 0;
        for (const Edge& e : edges_)
            if (e.color >= 0 && !seen[static_cast<size_t>(e.color)]) {
                seen[static_cast<size_t>(e.color)] = 1;
                ++count;
            }
        return count;
    }

    /// Copy of this graph with all colors dropped.
    ColoredMultigraph uncolored() const {
        std::vector<Edge> es = edges_;
        for (Edge& e : es) e.color = -1;
        return ColoredMultigraph(n_, std::move(es), 0);
    }

    /// Copy of this graph with the given per-edge coloring.
    ColoredMultigraph with_colors(const std::vector<int>& edge_colors, int color_count) const {
        if (edge_colors.size() != edges_.size())
            throw std::invalid_argument("coloring size does not match edge count");
        std::vector<Edge> es = edges_;
        for (size_t i = 0; i < es.size(); ++i) es[i].color = edge_colors[i];
        return ColoredMultigraph(n_, std::move(es), color_count);
    }

  private:
    int n_ = 0;
    int colors_ = 0;
    std::vector<Edge> edges_;
};

/// A set partition of the vertex set 0..n-1, kept in canonical form: blocks
/// are numbered by first appearance (the assignment vector is a restricted
/// growth string), so equal partitions compare equal componentwise.
class VertexPartition {
  public:
    VertexPartition() = default;

    /// Canonicalizes an arbitrary block assignment (any label values).
    static VertexPartition from_assignment(const std::vector<int>& raw) {
        VertexPartition p;
        p.block_of_.resize(raw.size());
        std::vector<int> relabel;
        for (size_t i = 0; i < raw.size(); ++i) {
            int found = -1;
            for (size_t j = 0; j < relabel.size(); ++j)
                if (relabel[j] == raw[i]) { found = static_cast<int>(j); break; }
            if (found < 0) {
                found = static_cast<int>(relabel.size());
                relabel.push_back(raw[i]);
            }
            p.block_of_[i] = found;
        }
        p.block_count_ = static_cast<int>(relabel.size());
        return p;
    }

    /// Builds from explicit blocks; they must partition 0..n-1 exactly.
    static VertexPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
        std::vector<int> raw(static_cast<size_t>(n), -1);
        for (size_t b = 0; b < blocks.size(); ++b) {
            if (blocks[b].empty()) throw std::invalid_argument("empty block");
            for (int v : blocks[b]) {
                if (v < 0 || v >= n) throw std::invalid_argument("block vertex out of range");
                if (raw[static_cast<size_t>(v)] != -1)
                    throw std::invalid_argument("vertex appears in two blocks");
                raw[static_cast<size_t>(v)] = static_cast<int>(b);
            }
        }
        for (int v = 0; v < n; ++v)
            if (raw[static_cast<size_t>(v)] == -1)
                throw std::invalid_argument("vertex missing from all blocks");
        return from_assignment(raw);
    }

    static VertexPartition singletons(int n) {
        std::vector<int> raw(static_cast<size_t>(n));
        std::iota(raw.begin(), raw.end(), 0);
        return from_assignment(raw);
    }

    static VertexPartition one_block(int n) {
        return from_assignment(std::vector<int>(static_cast<size_t>(n), 0));
    }

    int size() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return block_count_; }
    int block_of(int v) const { return block_of_[static_cast<size_t>(v)]; }
    const std::vector<int>& assignment() const { return block_of_; }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> out(static_cast<size_t>(block_count_));
        for (int v = 0; v < size(); ++v)
            out[static_cast<size_t>(block_of_[static_cast<size_t>(v)])].push_back(v);
        return out;
    }

    friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

    /// Lexicographic order on the canonical assignment; total on partitions
    /// of the same ground set and used as the deterministic tie-break
    /// everywhere a "first" partition is promised.
    friend bool operator<(const VertexPartition& a, const VertexPartition& b) {
        return a.block_of_ < b.block_of_;
    }

  private:
    friend class PartitionEnumerator;

    std::vector<int> block_of_;
    int block_count_ = 0;
};

/// Edge counts and color counts of one (graph, partition) pair.
///
/// `eta` is the repeated-color excess inside blocks (non-crossing edges minus
/// non-crossing colors); `xi` counts colors appearing on both a crossing and
/// a non-crossing edge. For a fully colored graph the identity
///   crossing_colors = used_colors - noncrossing_edges + eta + xi
/// holds exactly.
struct PartitionStats {
    int noncrossing_edges = 0;
    int crossing_edges = 0;
    int noncrossing_colors = 0;
    int crossing_colors = 0;
    int eta = 0;
    int xi = 0;
};

inline void check_partition_matches(const ColoredMultigraph& g, const VertexPartition& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("partition size does not match vertex count");
}

/// Splits edge ids into (crossing, noncrossing) with respect to `p`.
inline std::pair<std::vector<int>, std::vector<int>> classify_edges(const ColoredMultigraph& g,
                                                                    const VertexPartition& p) {
    check_partition_matches(g, p);
    std::vector<int> crossing, noncrossing;
    for (int id = 0; id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        (p.block_of(e.u) != p.block_of(e.v) ? crossing : noncrossing).push_back(id);
    }
    return {std::move(crossing), std::move(noncrossing)};
}

inline int crossing_count(const ColoredMultigraph& g, const VertexPartition& p) {
    check_partition_matches(g, p);
    int count = 0;
    for (const Edge& e : g.edges())
        if (p.block_of(e.u) != p.block_of(e.v)) ++count;
    return count;
}

inline int noncrossing_count(const ColoredMultigraph& g, const VertexPartition& p) {
    return g.edge_count() - crossing_count(g, p);
}

/// All six partition statistics for a fully colored graph.
inline PartitionStats partition_stats(const ColoredMultigraph& g, const VertexPartition& p) {
    check_partition_matches(g, p);
    PartitionStats s;
    std::vector<char> on_crossing(static_cast<size_t>(g.color_count()), 0);
    std::vector<char> on_noncrossing(static_cast<size_t>(g.color_count()), 0);
    for (const Edge& e : g.edges()) {
        if (e.color < 0) throw std::invalid_argument("partition_stats requires a fully colored graph");
        if (p.block_of(e.u) != p.block_of(e.v)) {
            ++s.crossing_edges;
            on_crossing[static_cast<size_t>(e.color)] = 1;
        } else {
            ++s.noncrossing_edges;
            on_noncrossing[static_cast<size_t>(e.color)] = 1;
        }
    }
    for (int c = 0; c < g.color_count(); ++c) {
        s.crossing_colors += on_crossing[static_cast<size_t>(c)];
        s.noncrossing_colors += on_noncrossing[static_cast<size_t>(c)];
        s.xi += on_crossing[static_cast<size_t>(c)] && on_noncrossing[static_cast<size_t>(c)];
    }
    s.eta = s.noncrossing_edges - s.noncrossing_colors;
    return s;
}

/// Number of distinct colors on crossing edges, |c(cr(P,G))|.
inline int crossing_color_count(const ColoredMultigraph& g, const VertexPartition& p) {
    check_partition_matches(g, p);
    std::vector<char> seen(static_cast<size_t>(g.color_count()), 0);
    int count = 0;
    for (const Edge& e : g.edges()) {
        if (e.color < 0) continue;
        if (p.block_of(e.u) != p.block_of(e.v) && !seen[static_cast<size_t>(e.color)]) {
            seen[static_cast<size_t>(e.color)] = 1;
            ++count;
        }
    }
    return count;
}

/// One block of `restrict_to_blocks`: the induced sub-multigraph plus the
/// mapping from its local vertex ids back to the original ids.
struct InducedBlock {
    ColoredMultigraph graph;
    std::vector<int> original_vertex;  // local id -> original id
};

/// Per-block induced sub-multigraphs; block i holds exactly the non-crossing
/// edges inside block i, with vertices re-labeled 0..|block|-1.
inline std::vector<InducedBlock> restrict_to_blocks(const ColoredMultigraph& g,
                                                    const VertexPartition& p) {
    check_partition_matches(g, p);
    std::vector<std::vector<int>> blocks = p.blocks();
    std::vector<int> local(static_cast<size_t>(g.vertex_count()), -1);
    for (const std::vector<int>& blk : blocks)
        for (size_t i = 0; i < blk.size(); ++i) local[static_cast<size_t>(blk[i])] = static_cast<int>(i);

    std::vector<std::vector<Edge>> block_edges(blocks.size());
    for (const Edge& e : g.edges()) {
        int b = p.block_of(e.u);
        if (b == p.block_of(e.v))
            block_edges[static_cast<size_t>(b)].push_back(
                Edge{local[static_cast<size_t>(e.u)], local[static_cast<size_t>(e.v)], e.color});
    }

    std::vector<InducedBlock> out;
    out.reserve(blocks.size());
    for (size_t b = 0; b < blocks.size(); ++b)
        out.push_back(InducedBlock{
            ColoredMultigraph(static_cast<int>(blocks[b].size()), std::move(block_edges[b]),
                              g.color_count()),
            blocks[b]});
    return out;
}

/// Partition of the vertex set into connected components.
inline VertexPartition component_partition(const ColoredMultigraph& g) {
    detail::Dsu dsu(g.vertex_count());
    for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
    std::vector<int> raw(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) raw[static_cast<size_t>(v)] = dsu.find(v);
    return VertexPartition::from_assignment(raw);
}

inline bool is_connected(const ColoredMultigraph& g) {
    return g.vertex_count() <= 1 || component_partition(g).block_count() == 1;
}

/// Uncolored complete graph K_n.
inline ColoredMultigraph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v, -1});
    return ColoredMultigraph(n, std::move(edges), 0);
}

/// Uncolored complete multipartite graph; vertices are numbered part by part
/// in the order given, edges join every pair of vertices in distinct parts.
inline ColoredMultigraph multipartite_graph(const std::vector<int>& part_sizes) {
    int n = 0;
    std::vector<int> part_of;
    for (size_t i = 0; i < part_sizes.size(); ++i) {
        if (part_sizes[i] <= 0) throw std::invalid_argument("part sizes must be positive");
        for (int k = 0; k < part_sizes[i]; ++k) part_of.push_back(static_cast<int>(i));
        n += part_sizes[i];
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<size_t>(u)] != part_of[static_cast<size_t>(v)])
                edges.push_back(Edge{u, v, -1});
    return ColoredMultigraph(n, std::move(edges), 0);
}

}  // namespace rt
