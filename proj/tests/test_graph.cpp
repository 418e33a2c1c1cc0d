#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rt/generators.hpp"
#include "rt/graph.hpp"
#include "rt/partition_enum.hpp"

using namespace rt;

namespace {

ColoredMultigraph triangle(int c01, int c02, int c12, int colors) {
    return ColoredMultigraph(3, {{0, 1, c01}, {0, 2, c02}, {1, 2, c12}}, colors);
}

}  // namespace

TEST_CASE("construction rejects bad edges") {
    CHECK_THROWS_AS(ColoredMultigraph(3, {{0, 0, -1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(ColoredMultigraph(3, {{0, 3, -1}}, 0), std::invalid_argument);
    CHECK_THROWS_AS(ColoredMultigraph(3, {{0, 1, 2}}, 2), std::invalid_argument);
    CHECK_NOTHROW(ColoredMultigraph(3, {{0, 1, -1}, {0, 1, -1}}, 0));  // parallel edges fine
}

TEST_CASE("classify_edges on K_3") {
    ColoredMultigraph g = complete_graph(3);
    VertexPartition p = VertexPartition::from_blocks(3, {{0, 1}, {2}});
    auto [crossing, noncrossing] = classify_edges(g, p);
    CHECK(crossing == std::vector<int>{1, 2});  // edges 02, 12
    CHECK(noncrossing == std::vector<int>{0});  // edge 01
}

TEST_CASE("classify_edges degenerate partitions") {
    ColoredMultigraph g = complete_graph(4);
    auto [cr1, nc1] = classify_edges(g, VertexPartition::one_block(4));
    CHECK(cr1.empty());
    CHECK(static_cast<int>(nc1.size()) == g.edge_count());
    auto [cr2, nc2] = classify_edges(g, VertexPartition::singletons(4));
    CHECK(static_cast<int>(cr2.size()) == g.edge_count());
    CHECK(nc2.empty());
}

TEST_CASE("classify_edges rejects size mismatch") {
    ColoredMultigraph g = complete_graph(4);
    CHECK_THROWS_AS(classify_edges(g, VertexPartition::singletons(3)), std::invalid_argument);
}

TEST_CASE("partition_stats on rainbow K_3") {
    ColoredMultigraph g = triangle(0, 1, 2, 3);
    PartitionStats s = partition_stats(g, VertexPartition::from_blocks(3, {{0, 1}, {2}}));
    CHECK(s.noncrossing_edges == 1);
    CHECK(s.crossing_edges == 2);
    CHECK(s.eta == 0);
    CHECK(s.xi == 0);
    CHECK(s.crossing_colors == 2);
}

TEST_CASE("partition_stats on monochrome K_3") {
    ColoredMultigraph g = triangle(0, 0, 0, 1);
    PartitionStats s = partition_stats(g, VertexPartition::from_blocks(3, {{0, 1}, {2}}));
    CHECK(s.eta == 0);
    CHECK(s.xi == 1);
    CHECK(s.crossing_colors == 1);
}

TEST_CASE("partition_stats with parallel edges") {
    // Two parallel 0-1 edges in one color plus a 0-1 edge in a second color,
    // split by the all-singleton bipartition: everything crosses.
    ColoredMultigraph g(2, {{0, 1, 0}, {0, 1, 0}, {0, 1, 1}}, 2);
    PartitionStats s = partition_stats(g, VertexPartition::singletons(2));
    CHECK(s.noncrossing_edges == 0);
    CHECK(s.eta == 0);
    CHECK(s.xi == 0);
    CHECK(s.crossing_colors == 2);
}

TEST_CASE("partition_stats demands full coloring") {
    ColoredMultigraph g = complete_graph(3);
    CHECK_THROWS_AS(partition_stats(g, VertexPartition::one_block(3)), std::invalid_argument);
}

TEST_CASE("stats identity on random colorings") {
    // crossing_colors = used_colors - noncrossing_edges + eta + xi,
    // and the two edge classes partition E(G).
    Rng rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + static_cast<int>(rng_below(rng, 5));
        ColoredMultigraph host = erdos_renyi(rng, n, 0.6);
        if (host.edge_count() == 0) continue;
        int k = 1 + static_cast<int>(rng_below(rng, host.edge_count()));
        ColoredMultigraph g = random_coloring(rng, host, k);
        for_each_partition(n, 1, n, [&](const VertexPartition& p) {
            PartitionStats s = partition_stats(g, p);
            CHECK(s.noncrossing_edges + s.crossing_edges == g.edge_count());
            CHECK(s.eta >= 0);
            CHECK(s.xi >= 0);
            CHECK(s.crossing_colors ==
                  g.used_color_count() - s.noncrossing_edges + s.eta + s.xi);
        });
    }
}

TEST_CASE("classify_edges invariant under block renaming and color permutation") {
    Rng rng(7);
    ColoredMultigraph host = erdos_renyi(rng, 5, 0.7);
    ColoredMultigraph g = random_coloring(rng, host, 3);
    VertexPartition p = VertexPartition::from_blocks(5, {{0, 3}, {1}, {2, 4}});
    VertexPartition renamed = VertexPartition::from_blocks(5, {{2, 4}, {0, 3}, {1}});
    CHECK(p == renamed);  // canonical form erases block naming
    CHECK(classify_edges(g, p) == classify_edges(g, renamed));

    // Permuting colors cannot move an edge between the crossing classes.
    std::vector<int> permuted(static_cast<size_t>(g.edge_count()));
    for (int id = 0; id < g.edge_count(); ++id)
        permuted[static_cast<size_t>(id)] = (g.edge(id).color + 1) % std::max(1, g.color_count());
    if (g.color_count() > 0) {
        ColoredMultigraph h = g.with_colors(permuted, g.color_count());
        CHECK(classify_edges(g, p) == classify_edges(h, p));
    }
}

TEST_CASE("restrict_to_blocks on K_4") {
    ColoredMultigraph g = complete_graph(4);
    auto blocks = restrict_to_blocks(g, VertexPartition::from_blocks(4, {{0, 1}, {2, 3}}));
    REQUIRE(blocks.size() == 2);
    for (const InducedBlock& b : blocks) {
        CHECK(b.graph.vertex_count() == 2);
        CHECK(b.graph.edge_count() == 1);  // a copy of K_2
    }
    CHECK(blocks[0].original_vertex == std::vector<int>{0, 1});
    CHECK(blocks[1].original_vertex == std::vector<int>{2, 3});
}

TEST_CASE("restrict_to_blocks with singletons") {
    ColoredMultigraph g = complete_graph(4);
    auto blocks = restrict_to_blocks(g, VertexPartition::singletons(4));
    REQUIRE(blocks.size() == 4);
    for (const InducedBlock& b : blocks) CHECK(b.graph.edge_count() == 0);
}

TEST_CASE("restrict_to_blocks on K_{2,2} across the bipartition") {
    // Sides {0,1},{2,3}; each block of {{0,2},{1,3}} holds one crossing pair.
    ColoredMultigraph g = multipartite_graph({2, 2});
    auto blocks = restrict_to_blocks(g, VertexPartition::from_blocks(4, {{0, 2}, {1, 3}}));
    REQUIRE(blocks.size() == 2);
    for (const InducedBlock& b : blocks) {
        CHECK(b.graph.vertex_count() == 2);
        CHECK(b.graph.edge_count() == 1);
    }
}

TEST_CASE("component partition and connectivity") {
    ColoredMultigraph two_k2(4, {{0, 1, -1}, {2, 3, -1}}, 0);
    CHECK_FALSE(is_connected(two_k2));
    CHECK(component_partition(two_k2) == VertexPartition::from_blocks(4, {{0, 1}, {2, 3}}));
    CHECK(is_connected(complete_graph(5)));
    CHECK(is_connected(ColoredMultigraph(1, {}, 0)));
}

TEST_CASE("multipartite graph edge counts") {
    CHECK(multipartite_graph({4, 4}).edge_count() == 16);
    CHECK(multipartite_graph({2, 2, 2}).edge_count() == 12);
    CHECK(multipartite_graph({3}).edge_count() == 0);
    CHECK(multipartite_graph({1, 1, 1, 1}).edge_count() == 6);  // K_4
}
