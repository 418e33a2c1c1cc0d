#include <catch2/catch_amalgamated.hpp>

#include "rt/formulas.hpp"
#include "rt/graph.hpp"
#include "rt/partition_enum.hpp"

using namespace rt;

namespace {

// Independent route for f_G(s): exhaustive scan of the explicit graph.
long long f_exhaustive(const MultipartiteShape& shape, int s) {
    ColoredMultigraph g = shape.to_graph();
    auto best = maximize_over_partitions(
        g.vertex_count(), s, s,
        [&](const VertexPartition& p) { return 1LL * noncrossing_count(g, p); });
    REQUIRE(best.has_value());
    return best->score;
}

}  // namespace

TEST_CASE("shape validation and edge counts") {
    MultipartiteShape s = MultipartiteShape::of({2, 4, 1});
    CHECK(s.parts == std::vector<long long>{4, 2, 1});  // sorted descending
    CHECK(s.total() == 7);
    CHECK(s.edge_count() == 14);
    CHECK(MultipartiteShape::of({4, 4}).edge_count() == 16);
    CHECK_THROWS_AS(MultipartiteShape::of({}), std::invalid_argument);
    CHECK_THROWS_AS(MultipartiteShape::of({3, 0}), std::invalid_argument);
}

TEST_CASE("f_multipartite pinned values") {
    CHECK(f_multipartite(MultipartiteShape::of({1, 1, 1, 1, 1, 1}), 3) == 6);  // K_6: C(4,2)
    CHECK(f_multipartite(MultipartiteShape::of({4, 4}), 2) == 12);             // |E(K_{3,4})|
    CHECK(f_multipartite(MultipartiteShape::of({4, 4}), 8) == 0);              // s = n
    CHECK(f_multipartite(MultipartiteShape::of({3, 2, 1}), 6) == 0);
    CHECK(f_multipartite(MultipartiteShape::of({4, 4}), 1) == 16);             // s = 1: |E|
    // K_{2,2,2} at s = 3: exhaustive scan over the explicit 6-vertex graph
    // gives 5 (block of 4 vertices meeting all three parts), matching
    // |E(K_{0,2,2})| + delta = 4 + 1.
    CHECK(f_exhaustive(MultipartiteShape::of({2, 2, 2}), 3) == 5);
    CHECK(f_multipartite(MultipartiteShape::of({2, 2, 2}), 3) == 5);
    CHECK_THROWS_AS(f_multipartite(MultipartiteShape::of({2, 2}), 5), std::invalid_argument);
}

TEST_CASE("f_multipartite equals the exhaustive scan for small shapes") {
    for (long long n = 2; n <= 7; ++n)
        for (const MultipartiteShape& shape : enumerate_shapes(n))
            for (int s = 1; s <= n; ++s)
                CHECK(f_multipartite(shape, s) == f_exhaustive(shape, s));
}

TEST_CASE("f_multipartite_witness attains its value") {
    for (long long n = 2; n <= 7; ++n)
        for (const MultipartiteShape& shape : enumerate_shapes(n)) {
            ColoredMultigraph g = shape.to_graph();
            for (int s = 1; s <= n; ++s) {
                auto [value, witness] = f_multipartite_witness(shape, s);
                CHECK(value == f_multipartite(shape, s));
                CHECK(witness.block_count() == s);
                CHECK(noncrossing_count(g, witness) == value);
            }
        }
}

TEST_CASE("f profile matches pointwise evaluation") {
    MultipartiteShape shape = MultipartiteShape::of({3, 2, 2, 1});
    std::vector<long long> f = f_multipartite_profile(shape);
    for (long long s = 1; s <= shape.total(); ++s)
        CHECK(f[static_cast<size_t>(s)] == f_multipartite(shape, s));
}

TEST_CASE("concavity of f") {
    CHECK(check_concavity(MultipartiteShape::of({1, 1, 1, 1, 1, 1})));
    CHECK(check_concavity(MultipartiteShape::of({4, 4})));
    CHECK(check_concavity(MultipartiteShape::of({3, 2, 1})));
    CHECK(check_concavity(MultipartiteShape::of({2, 2})));  // n = 4 boundary
}

TEST_CASE("r_complete four branches") {
    AntiRamseyValue v = r_complete(6, 1);  // n >= 2t+2
    CHECK(v.value == 7);
    CHECK(v.kind == ValueKind::Max);
    CHECK(v.branch == "n>=2t+2");

    v = r_complete(4, 2);  // n = 2t
    CHECK(v.value == 4);
    CHECK(v.branch == "n=2t");

    v = r_complete(5, 2);  // n = 2t+1
    CHECK(v.value == 6);
    CHECK(v.branch == "n=2t+1");

    v = r_complete(3, 2);  // n < 2t
    CHECK(v.value == 3);
    CHECK(v.kind == ValueKind::EdgeCount);
    CHECK(v.branch == "n<2t");
}

TEST_CASE("r_complete degenerate hosts") {
    CHECK(r_complete(1, 1).kind == ValueKind::NoAvoiding);
    CHECK(r_complete(1, 3).kind == ValueKind::NoAvoiding);
    CHECK(r_complete(2, 1).kind == ValueKind::NoAvoiding);
    AntiRamseyValue v = r_complete(2, 2);  // K_2 cannot pack 2 spanning trees
    CHECK(v.kind == ValueKind::EdgeCount);
    CHECK(v.value == 1);
}

TEST_CASE("r_multipartite pinned values") {
    AntiRamseyValue v = r_multipartite(MultipartiteShape::of({5, 4}), 1);
    CHECK(v.value == 13);  // (5-2)*4 + 1 + 0
    CHECK(v.kind == ValueKind::Max);

    v = r_multipartite(MultipartiteShape::of({3, 1}), 2);  // q = 1 < t
    CHECK(v.kind == ValueKind::EdgeCount);
    CHECK(v.value == 3);
    CHECK(v.branch.find("sum_{i>=2} n_i<t") != std::string::npos);

    v = r_multipartite(MultipartiteShape::of({2, 2, 2}), 1);  // max{4, 4+1+1}
    CHECK(v.value == 6);
    CHECK(v.branch == "f(3)+t");
}

TEST_CASE("r_bipartite pinned values") {
    AntiRamseyValue v = r_bipartite(4, 4, 1);  // max{6, 8+1+1}
    CHECK(v.value == 10);
    v = r_bipartite(5, 5, 2);  // p >= q >= 2t+1 regime
    CHECK(v.value == 18);
    v = r_bipartite(2, 2, 2);  // t(p+q-1) = 6 > 4
    CHECK(v.kind == ValueKind::EdgeCount);
    CHECK(v.value == 4);
    CHECK_THROWS_AS(r_bipartite(2, 3, 1), std::invalid_argument);
}

TEST_CASE("complete graphs through the multipartite formula") {
    for (long long n = 1; n <= 12; ++n) {
        MultipartiteShape ones{std::vector<long long>(static_cast<size_t>(n), 1)};
        for (long long t = 1; t <= 6; ++t) {
            AntiRamseyValue a = r_complete(n, t);
            AntiRamseyValue b = r_multipartite(ones, t);
            CHECK(a.kind == b.kind);
            if (a.has_value()) CHECK(a.value == b.value);
        }
    }
}

TEST_CASE("bipartite formula matches the multipartite formula") {
    for (long long p = 1; p <= 10; ++p)
        for (long long q = 1; q <= p; ++q)
            for (long long t = 1; t <= 6; ++t) {
                AntiRamseyValue a = r_bipartite(p, q, t);
                AntiRamseyValue b = r_multipartite(MultipartiteShape::of({p, q}), t);
                CHECK(a.kind == b.kind);
                if (a.has_value()) CHECK(a.value == b.value);
            }
}

TEST_CASE("large balanced bipartite hosts use the split bound with margin") {
    // For p >= q >= 2t+1 the value is (p-2)q + t + delta and beats the tree
    // bound by at least t.
    for (long long p = 3; p <= 10; ++p)
        for (long long q = 3; q <= p; ++q)
            for (long long t = 1; 2 * t + 1 <= q; ++t) {
                long long delta = p == q ? 1 : 0;
                AntiRamseyValue v = r_bipartite(p, q, t);
                CHECK(v.value == (p - 2) * q + t + delta);
                CHECK((p - 2 - t) * (q - t) - t * t + t + delta >= t);
            }
}

TEST_CASE("shape enumeration counts integer partitions") {
    CHECK(enumerate_shapes(4).size() == 5);
    CHECK(enumerate_shapes(7).size() == 15);
    for (const MultipartiteShape& s : enumerate_shapes(6)) CHECK(s.total() == 6);
}
