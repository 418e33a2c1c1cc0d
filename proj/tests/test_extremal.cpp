#include <catch2/catch_amalgamated.hpp>

#include "rt/anti_ramsey.hpp"
#include "rt/extremal.hpp"
#include "rt/generators.hpp"
#include "rt/graph.hpp"
#include "rt/rainbow.hpp"

using namespace rt;

TEST_CASE("extremal coloring of K_4 at singletons") {
    ColoredMultigraph g = complete_graph(4);
    ColoredMultigraph colored = extremal_coloring(g, 1, VertexPartition::singletons(4));
    CHECK(colored.color_count() == 2);  // 0 + 1*(4-2)
    CHECK(colored.used_color_count() == 2);
    // One crossing edge keeps its own color, the other five share c0.
    int c0_edges = 0;
    for (const Edge& e : colored.edges()) c0_edges += e.color == 0;
    CHECK(c0_edges == 5);
    CHECK(certify_avoiding(colored, 1));
}

TEST_CASE("extremal coloring of K_6 uses exactly r colors") {
    ColoredMultigraph g = complete_graph(6);
    VertexPartition p = VertexPartition::from_blocks(6, {{0, 1, 2, 3}, {4}, {5}});
    ColoredMultigraph colored = extremal_coloring(g, 1, p);
    CHECK(colored.used_color_count() == 7);  // C(4,2) + 1 = r(K_6, 1)
    CHECK(certify_avoiding(colored, 1));
}

TEST_CASE("extremal coloring boundary: |cr| = t(|P|-2)") {
    // C_4 at singletons with t = 2: exactly 4 crossing edges and the c0
    // class ends up with a single edge.
    ColoredMultigraph c4(4, {{0, 1, -1}, {1, 2, -1}, {2, 3, -1}, {0, 3, -1}}, 0);
    ColoredMultigraph colored = extremal_coloring(c4, 2, VertexPartition::singletons(4));
    CHECK(colored.used_color_count() == 4);
    int c0_edges = 0;
    for (const Edge& e : colored.edges()) c0_edges += e.color == 0;
    CHECK(c0_edges == 1);
    // One edge short is rejected.
    CHECK_THROWS_AS(extremal_coloring(c4, 3, VertexPartition::singletons(4)),
                    std::invalid_argument);
}

TEST_CASE("extremal coloring needs at least 3 blocks") {
    CHECK_THROWS_AS(extremal_coloring(complete_graph(4), 1, VertexPartition::one_block(4)),
                    std::invalid_argument);
}

TEST_CASE("rainbow coloring") {
    CHECK(rainbow_coloring(ColoredMultigraph(3, {}, 0)).color_count() == 0);
    ColoredMultigraph two_k2 = rainbow_coloring(ColoredMultigraph(4, {{0, 1, -1}, {2, 3, -1}}, 0));
    CHECK(two_k2.color_count() == 2);
    CHECK(certify_avoiding(two_k2, 1));  // no spanning tree exists at all
    ColoredMultigraph k4 = rainbow_coloring(complete_graph(4));
    CHECK(k4.color_count() == 6);
    CHECK_FALSE(certify_avoiding(k4, 1));
}

TEST_CASE("extremal coloring of K_{4,4} at the solver witness") {
    ColoredMultigraph g = multipartite_graph({4, 4});
    AntiRamseyResult r = r_general(g, 1);
    REQUIRE(r.branch == GeneralBranch::PartitionMax);
    CHECK(r.value == 10);
    ColoredMultigraph colored = extremal_coloring(g, 1, *r.witness);
    CHECK(colored.used_color_count() == 10);
    CHECK(certify_avoiding(colored, 1));
}

TEST_CASE("construction avoids for every valid partition on small hosts") {
    Rng rng(808);
    int cases = 0;
    for (int iter = 0; iter < 60 && cases < 30; ++iter) {
        int n = 3 + static_cast<int>(rng_below(rng, 4));  // n <= 6
        ColoredMultigraph g = random_multigraph(rng, n, 3 + static_cast<int>(rng_below(rng, 8)));
        int t = 1 + static_cast<int>(rng_below(rng, 2));
        std::vector<VertexPartition> parts = enumerate_partitions(n, 3, n);
        const VertexPartition& p = parts[rng_below(rng, parts.size())];
        long long need = 1LL * t * (p.block_count() - 2);
        if (crossing_count(g, p) < need) continue;

        ColoredMultigraph colored = extremal_coloring(g, t, p);
        CHECK(colored.used_color_count() == noncrossing_count(g, p) + need);
        CHECK(certify_avoiding(colored, t));
        ++cases;
    }
    CHECK(cases > 0);
}

TEST_CASE("witness coloring at the solver witness is maximal for K_4") {
    // Splitting any color class of the extremal coloring in two makes the
    // rainbow-tree search succeed: the construction sits exactly at r(G,t).
    ColoredMultigraph g = complete_graph(4);
    AntiRamseyResult r = r_general(g, 1);
    REQUIRE(r.branch == GeneralBranch::PartitionMax);
    ColoredMultigraph colored = extremal_coloring(g, 1, *r.witness);
    CHECK(colored.used_color_count() == r.value);
    CHECK(certify_avoiding(colored, 1));

    std::vector<std::vector<int>> classes(static_cast<size_t>(colored.color_count()));
    for (int id = 0; id < colored.edge_count(); ++id)
        classes[static_cast<size_t>(colored.edge(id).color)].push_back(id);
    for (const std::vector<int>& cls : classes) {
        if (cls.size() < 2) continue;
        // Every way of splitting one class into two non-empty halves (the
        // last element stays put to skip complements).
        for (unsigned mask = 1; mask < (1u << (cls.size() - 1)); ++mask) {
            std::vector<int> colors(static_cast<size_t>(colored.edge_count()));
            for (int id = 0; id < colored.edge_count(); ++id)
                colors[static_cast<size_t>(id)] = colored.edge(id).color;
            for (size_t j = 0; j + 1 < cls.size(); ++j)
                if (mask & (1u << j))
                    colors[static_cast<size_t>(cls[j])] = colored.color_count();
            ColoredMultigraph split = g.with_colors(colors, colored.color_count() + 1);
            CHECK_FALSE(certify_avoiding(split, 1));
        }
    }
}
