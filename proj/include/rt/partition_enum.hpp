#pragma once

// Exhaustive enumeration of vertex set partitions in restricted-growth-string
// order, plus the max/min reductions over the partition lattice that the
// solvers are built on.
//
// A partition of {0..n-1} is encoded by its canonical assignment vector
// a[0..n-1] (a restricted growth string): a[0] = 0 and each a[i] is at most
// one larger than every previous value. Each partition has exactly one such
// encoding, so enumeration order and "first witness" are well-defined.

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "rt/errors.hpp"
#include "rt/graph.hpp"

namespace rt {

/// Hard stop for general partition enumeration. Bell(14) is ~1.9e8; beyond
/// that a scan silently turns into a multi-day run, so callers must opt in
/// explicitly via the cap parameter.
inline constexpr int kDefaultPartitionCap = 14;

class PartitionEnumerator {
  public:
    // Visits every partition of {0..n-1} with block count in
    // [min_blocks, max_blocks], in lexicographic RGS order. The visitor gets
    // a reference to a reused buffer; it must copy if it wants to keep one.
    // A visitor returning bool stops the scan by returning false.
    template <typename Visitor>
    static void run(int n, int min_blocks, int max_blocks, Visitor&& visit) {
        if (n < 1) throw std::invalid_argument("partition enumeration needs n >= 1");
        if (min_blocks < 1 || min_blocks > max_blocks || max_blocks > n)
            throw std::invalid_argument("invalid block count range");
        PartitionEnumerator e(n, min_blocks, max_blocks);
        e.buffer_.block_of_[0] = 0;
        e.recurse(1, 0, visit);
    }

    // Same scan restricted to completions of a fixed assignment prefix
    // (prefix[0..len-1] canonical, used_blocks = max value + 1). This is the
    // unit of work for parallel scans.
    template <typename Visitor>
    static void run_from_prefix(int n, int min_blocks, int max_blocks,
                                const std::vector<int>& prefix, Visitor&& visit) {
        PartitionEnumerator e(n, min_blocks, max_blocks);
        int used = 0;
        for (size_t i = 0; i < prefix.size(); ++i) {
            e.buffer_.block_of_[i] = prefix[i];
            used = std::max(used, prefix[i] + 1);
        }
        e.recurse(static_cast<int>(prefix.size()), used - 1, visit);
    }

    /// All valid canonical prefixes of the given length, in lex order.
    static std::vector<std::vector<int>> prefixes(int n, int min_blocks, int max_blocks,
                                                  int length) {
        std::vector<std::vector<int>> out;
        run(length, 1, std::min(length, max_blocks),
            [&](const VertexPartition& p) {
                // A prefix is viable iff the remaining positions can still
                // reach min_blocks.
                if (p.block_count() + (n - length) >= min_blocks)
                    out.push_back(p.assignment());
            });
        return out;
    }

  private:
    PartitionEnumerator(int n, int min_blocks, int max_blocks)
        : n_(n), min_blocks_(min_blocks), max_blocks_(max_blocks) {
        buffer_.block_of_.assign(static_cast<size_t>(n), 0);
    }

    template <typename Visitor>
    bool recurse(int pos, int max_used, Visitor&& visit) {
        int used = max_used + 1;
        if (used + (n_ - pos) < min_blocks_) return true;  // cannot reach min_blocks
        if (pos == n_) {
            if (used < min_blocks_) return true;
            buffer_.block_count_ = used;
            if constexpr (std::is_void_v<decltype(visit(buffer_))>) {
                visit(static_cast<const VertexPartition&>(buffer_));
                return true;
            } else {
                return visit(static_cast<const VertexPartition&>(buffer_));
            }
        }
        int limit = std::min(used, max_blocks_ - 1);  // new block only if below cap
        for (int b = 0; b <= limit; ++b) {
            buffer_.block_of_[static_cast<size_t>(pos)] = b;
            if (!recurse(pos + 1, std::max(max_used, b), visit)) return false;
        }
        return true;
    }

    int n_;
    int min_blocks_;
    int max_blocks_;
    VertexPartition buffer_;
};

/// Streams every partition with block count in [min_blocks, max_blocks] to
/// the visitor, each exactly once, in canonical order. Refuses n beyond the
/// cap rather than starting a run that cannot finish.
template <typename Visitor>
void for_each_partition(int n, int min_blocks, int max_blocks, Visitor&& visit,
                        int cap = kDefaultPartitionCap) {
    if (n > cap)
        throw CapExceeded("partition enumeration over n=" + std::to_string(n) +
                          " vertices exceeds the exhaustive cap " + std::to_string(cap));
    PartitionEnumerator::run(n, min_blocks, max_blocks, std::forward<Visitor>(visit));
}

/// Materialized variant for small n.
inline std::vector<VertexPartition> enumerate_partitions(int n, int min_blocks, int max_blocks,
                                                         int cap = kDefaultPartitionCap) {
    std::vector<VertexPartition> out;
    for_each_partition(n, min_blocks, max_blocks,
                       [&](const VertexPartition& p) { out.push_back(p); }, cap);
    return out;
}

/// Common refinement of two partitions of the same vertex set: blocks are
/// the non-empty pairwise intersections. The result refines both inputs.
inline VertexPartition common_refinement(const VertexPartition& p1, const VertexPartition& p2) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("common_refinement: partition sizes differ");
    std::vector<int> raw(static_cast<size_t>(p1.size()));
    for (int v = 0; v < p1.size(); ++v)
        raw[static_cast<size_t>(v)] = p1.block_of(v) * p2.block_count() + p2.block_of(v);
    return VertexPartition::from_assignment(raw);
}

/// Result of a partition maximization: the exact maximum and the first
/// partition attaining it in canonical order.
struct PartitionMax {
    long long score = 0;
    VertexPartition witness;
};

namespace detail {

template <typename Objective>
PartitionMax max_scan_sequential(int n, int min_blocks, int max_blocks, Objective&& score) {
    PartitionMax best;
    bool have = false;
    PartitionEnumerator::run(n, min_blocks, max_blocks, [&](const VertexPartition& p) {
        long long s = score(p);
        if (!have || s > best.score) {
            best.score = s;
            best.witness = p;
            have = true;
        }
    });
    return best;
}

}  // namespace detail

/// Exact maximum of `score` over all partitions with block count in range,
/// plus a deterministic witness. Returns nullopt when the range is empty
/// (min_blocks > n) — callers decide what an empty domain means.
///
/// With jobs > 1 the enumeration space is split by assignment prefix and
/// scanned by a worker pool; results merge by (score desc, canonical order
/// asc), so the outcome is identical to the sequential scan. The objective
/// must be pure.
template <typename Objective>
std::optional<PartitionMax> maximize_over_partitions(int n, int min_blocks, int max_blocks,
                                                     Objective&& score, int jobs = 1,
                                                     int cap = kDefaultPartitionCap) {
    if (min_blocks > n) return std::nullopt;
    if (n > cap)
        throw CapExceeded("partition maximization over n=" + std::to_string(n) +
                          " vertices exceeds the exhaustive cap " + std::to_string(cap));
    max_blocks = std::min(max_blocks, n);
    if (min_blocks > max_blocks) return std::nullopt;

    const int prefix_len = 6;
    if (jobs <= 1 || n <= prefix_len)
        return detail::max_scan_sequential(n, min_blocks, max_blocks, score);

    std::vector<std::vector<int>> chunks =
        PartitionEnumerator::prefixes(n, min_blocks, max_blocks, prefix_len);
    std::vector<PartitionMax> results(chunks.size());
    std::vector<char> nonempty(chunks.size(), 0);
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= chunks.size()) return;
            PartitionMax best;
            bool have = false;
            PartitionEnumerator::run_from_prefix(n, min_blocks, max_blocks, chunks[i],
                                                 [&](const VertexPartition& p) {
                                                     long long s = score(p);
                                                     if (!have || s > best.score) {
                                                         best.score = s;
                                                         best.witness = p;
                                                         have = true;
                                                     }
                                                 });
            results[i] = std::move(best);
            nonempty[i] = have;
        }
    };

    std::vector<std::thread> pool;
    for (int j = 0; j < jobs - 1; ++j) pool.emplace_back(worker);
    worker();
    for (std::thread& th : pool) th.join();

    // Chunks are in lex order, so the first chunk attaining the best score
    // holds the canonical witness.
    std::optional<PartitionMax> best;
    for (size_t i = 0; i < chunks.size(); ++i) {
        if (!nonempty[i]) continue;
        if (!best || results[i].score > best->score) best = std::move(results[i]);
    }
    return best;
}

}  // namespace rt
