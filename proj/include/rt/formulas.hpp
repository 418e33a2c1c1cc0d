#pragma once

// Closed-form anti-Ramsey values for complete and complete multipartite host
// graphs, together with their ingredient f_G(s) = max non-crossing edge count
// over s-block vertex partitions.
//
// For a complete multipartite graph, f_G(s) is attained by a partition made
// of one large block plus s-1 singletons, where the singletons are split off
// a currently-largest part one at a time. All formulas below evaluate that
// greedy split sequence; the exhaustive partition scan in partition_enum.hpp
// is the independent route the tests compare against.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rt/graph.hpp"

namespace rt {

/// Part sizes of a complete multipartite host K_{n1,...,nr}, kept sorted
/// descending. K_n is the all-ones shape; a 1-part shape is edgeless.
struct MultipartiteShape {
    std::vector<long long> parts;  // sorted descending, all >= 1

    static MultipartiteShape of(std::vector<long long> sizes) {
        if (sizes.empty()) throw std::invalid_argument("shape needs at least one part");
        for (long long s : sizes)
            if (s <= 0) throw std::invalid_argument("part sizes must be positive");
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        return MultipartiteShape{std::move(sizes)};
    }

    long long total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }

    long long edge_count() const {
        long long n = total(), sq = 0;
        for (long long p : parts) sq += p * p;
        return (n * n - sq) / 2;
    }

    /// Explicit graph on int-sized vertex sets (for the exhaustive routes).
    ColoredMultigraph to_graph() const {
        std::vector<int> sizes;
        for (long long p : parts) sizes.push_back(static_cast<int>(p));
        return multipartite_graph(sizes);
    }

    friend bool operator==(const MultipartiteShape&, const MultipartiteShape&) = default;
};

/// Outcome kind of a closed-form evaluation.
///   EdgeCount:  the host admits no t edge-disjoint spanning trees at all, so
///               the all-rainbow coloring avoids and the value is |E|.
///   Max:        the partition-maximum regime; the value is the formula max.
///   NoAvoiding: every coloring (even all-rainbow) contains t edge-disjoint
///               rainbow spanning trees, so no avoiding coloring exists and
///               there is no number to report. Only hosts with n <= 2 vertices
///               land here.
enum class ValueKind { EdgeCount, Max, NoAvoiding };

inline const char* to_string(ValueKind k) {
    switch (k) {
        case ValueKind::EdgeCount: return "edge-count";
        case ValueKind::Max: return "max";
        case ValueKind::NoAvoiding: return "no-avoiding-coloring";
    }
    return "?";
}

/// A closed-form anti-Ramsey value plus the regime that produced it. `branch`
/// lists every condition that fired, so ties and double conditions stay
/// visible to the CLI.
struct AntiRamseyValue {
    ValueKind kind = ValueKind::Max;
    long long value = -1;  // meaningful unless kind == NoAvoiding
    std::string branch;

    bool has_value() const { return kind != ValueKind::NoAvoiding; }
};

namespace detail {

inline long long choose2(long long n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

// Applies `splits` greedy single-vertex splits to the shape's part sizes and
// returns the residual sizes. Each split removes one vertex from a currently
// largest part.
inline std::vector<long long> split_greedy(std::vector<long long> sizes, long long splits) {
    for (long long k = 0; k < splits; ++k) {
        auto it = std::max_element(sizes.begin(), sizes.end());
        --(*it);
    }
    return sizes;
}

inline long long multipartite_edges(const std::vector<long long>& sizes) {
    long long n = 0, sq = 0;
    for (long long p : sizes) {
        n += p;
        sq += p * p;
    }
    return (n * n - sq) / 2;
}

}  // namespace detail

/// f_G(s): maximum number of non-crossing edges over all s-block partitions
/// of the complete multipartite host. s = 1 returns |E|, s = n returns 0.
inline long long f_multipartite(const MultipartiteShape& shape, long long s) {
    long long n = shape.total();
    if (s < 1 || s > n) throw std::invalid_argument("f_multipartite: s out of range");
    return detail::multipartite_edges(detail::split_greedy(shape.parts, s - 1));
}

/// f_G(s) for every s in 1..n, computed by one pass of the split sequence.
inline std::vector<long long> f_multipartite_profile(const MultipartiteShape& shape) {
    long long n = shape.total();
    std::vector<long long> f(static_cast<size_t>(n) + 1, 0);
    std::vector<long long> sizes = shape.parts;
    f[1] = detail::multipartite_edges(sizes);
    for (long long s = 2; s <= n; ++s) {
        auto it = std::max_element(sizes.begin(), sizes.end());
        --(*it);
        f[static_cast<size_t>(s)] = detail::multipartite_edges(sizes);
    }
    return f;
}

/// Witness variant: materializes the split sequence as a vertex partition of
/// the explicit graph produced by `MultipartiteShape::to_graph()` (vertices
/// numbered part by part).
inline std::pair<long long, VertexPartition> f_multipartite_witness(const MultipartiteShape& shape,
                                                                    long long s) {
    long long n = shape.total();
    if (s < 1 || s > n) throw std::invalid_argument("f_multipartite: s out of range");
    std::vector<long long> sizes = shape.parts;
    std::vector<long long> removed(sizes.size(), 0);
    for (long long k = 0; k < s - 1; ++k) {
        size_t best = 0;
        for (size_t i = 1; i < sizes.size(); ++i)
            if (sizes[i] > sizes[best]) best = i;
        --sizes[best];
        ++removed[best];
    }
    // Split vertices become singletons; everything else is the main block.
    std::vector<int> raw;
    int next_block = 1;
    for (size_t i = 0; i < shape.parts.size(); ++i)
        for (long long k = 0; k < shape.parts[i]; ++k)
            raw.push_back(k < removed[i] ? next_block++ : 0);
    return {detail::multipartite_edges(sizes), VertexPartition::from_assignment(raw)};
}

/// Checks f_G(s) - 2 f_G(s+1) + f_G(s+2) >= 0 for all 2 <= s <= n-2.
/// Vacuously true for n < 4.
inline bool check_concavity(const MultipartiteShape& shape) {
    long long n = shape.total();
    if (n < 4) return true;
    std::vector<long long> f = f_multipartite_profile(shape);
    for (long long s = 2; s + 2 <= n; ++s)
        if (f[static_cast<size_t>(s)] - 2 * f[static_cast<size_t>(s + 1)] +
                f[static_cast<size_t>(s + 2)] <
            0)
            return false;
    return true;
}

/// r(K_n, t). The four regimes:
///   n >= 2t+2: C(n-2,2) + t
///   n = 2t+1:  C(n-1,2)
///   n = 2t:    C(n,2) - t
///   n < 2t:    C(n,2)
/// Hosts on n <= 2 vertices that still pack t spanning trees (K_1 always,
/// K_2 for t = 1) have no avoiding coloring at all and report NoAvoiding.
inline AntiRamseyValue r_complete(long long n, long long t) {
    if (n < 1 || t < 1) throw std::invalid_argument("r_complete: n, t must be positive");
    if (n == 1 || (n == 2 && t == 1))
        return {ValueKind::NoAvoiding, -1, "n<=2 with t spanning trees present"};
    if (n < 2 * t) return {ValueKind::EdgeCount, detail::choose2(n), "n<2t"};
    if (n == 2 * t) return {ValueKind::Max, detail::choose2(n) - t, "n=2t"};
    if (n == 2 * t + 1) return {ValueKind::Max, detail::choose2(n - 1), "n=2t+1"};
    return {ValueKind::Max, detail::choose2(n - 2) + t, "n>=2t+2"};
}

/// r(K_{n1,...,nr}, t):
///   |E|                                    if t(n-1) > |E| or sum_{i>=2} n_i < t
///   max{ t(n-2), f(3) + t }                otherwise,
/// where f(3) = |E(K_{n1-2,n2,...,nr})| + delta_{n1 n2} is evaluated through
/// the greedy split (which also covers shapes with n1 < 2).
inline AntiRamseyValue r_multipartite(const MultipartiteShape& shape, long long t) {
    if (t < 1) throw std::invalid_argument("r_multipartite: t must be positive");
    long long n = shape.total();
    long long m = shape.edge_count();
    if (n == 1) return {ValueKind::NoAvoiding, -1, "single vertex"};

    bool tree_excess = t * (n - 1) > m;
    long long rest = n - shape.parts[0];
    bool small_parts = rest < t;
    if (tree_excess || small_parts) {
        std::string branch;
        if (tree_excess) branch = "t(n-1)>|E|";
        if (small_parts) branch += branch.empty() ? "sum_{i>=2} n_i<t" : ", sum_{i>=2} n_i<t";
        return {ValueKind::EdgeCount, m, branch};
    }
    if (n <= 2) return {ValueKind::NoAvoiding, -1, "n<=2 with t spanning trees present"};

    long long tree_bound = t * (n - 2);
    long long split_bound = f_multipartite(shape, 3) + t;
    if (tree_bound >= split_bound) return {ValueKind::Max, tree_bound, "t(n-2)"};
    return {ValueKind::Max, split_bound, "f(3)+t"};
}

/// r(K_{p,q}, t) by direct instantiation:
///   pq                                         if t(p+q-1) > pq or q < t
///   max{ t(p+q-2), (p-2)q + t + delta_pq }     otherwise.
/// Agrees with r_multipartite({p,q}, t) everywhere; kept as a separate route
/// so the two can be checked against each other.
inline AntiRamseyValue r_bipartite(long long p, long long q, long long t) {
    if (p < q || q < 1) throw std::invalid_argument("r_bipartite: need p >= q >= 1");
    if (t < 1) throw std::invalid_argument("r_bipartite: t must be positive");

    bool tree_excess = t * (p + q - 1) > p * q;
    bool small_side = q < t;
    if (tree_excess || small_side) {
        std::string branch;
        if (tree_excess) branch = "t(p+q-1)>pq";
        if (small_side) branch += branch.empty() ? "q<t" : ", q<t";
        return {ValueKind::EdgeCount, p * q, branch};
    }
    if (p + q <= 2) return {ValueKind::NoAvoiding, -1, "n<=2 with t spanning trees present"};

    long long delta = p == q ? 1 : 0;
    long long tree_bound = t * (p + q - 2);
    long long split_bound = (p - 2) * q + t + delta;
    if (tree_bound >= split_bound) return {ValueKind::Max, tree_bound, "t(p+q-2)"};
    return {ValueKind::Max, split_bound, "(p-2)q+t+delta"};
}

/// All multipartite shapes with the given total vertex count (integer
/// partitions of n, parts descending), in lexicographically decreasing order.
inline std::vector<MultipartiteShape> enumerate_shapes(long long n) {
    std::vector<MultipartiteShape> out;
    std::vector<long long> current;
    auto rec = [&](auto&& self, long long remaining, long long max_part) -> void {
        if (remaining == 0) {
            out.push_back(MultipartiteShape{current});
            return;
        }
        for (long long p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

}  // namespace rt
