#include <catch2/catch_amalgamated.hpp>

#include "rt/anti_ramsey.hpp"
#include "rt/extremal.hpp"
#include "rt/formulas.hpp"
#include "rt/generators.hpp"
#include "rt/graph.hpp"
#include "rt/rainbow.hpp"

using namespace rt;

TEST_CASE("packing feasibility on small hosts") {
    CHECK(packing_feasible(complete_graph(4), 1).feasible);

    ColoredMultigraph two_k2(4, {{0, 1, -1}, {2, 3, -1}}, 0);
    PackingCheck check = packing_feasible(two_k2, 1);
    CHECK_FALSE(check.feasible);
    REQUIRE(check.violator.has_value());
    CHECK(*check.violator == VertexPartition::from_blocks(4, {{0, 1}, {2, 3}}));

    // K_4 has exactly 6 = 2*(4-1) edges and packs 2 edge-disjoint spanning
    // trees; every partition meets the bound with equality at singletons.
    CHECK(packing_feasible(complete_graph(4), 2).feasible);
    TreeSearchResult trees = find_edge_disjoint_rainbow_trees(rainbow_coloring(complete_graph(4)), 2);
    REQUIRE(trees.found());
    CHECK(trees.trees.t() == 2);

    CHECK_FALSE(packing_feasible(complete_graph(4), 3).feasible);
}

TEST_CASE("packing matches an explicit scan on random multigraphs") {
    Rng rng(4242);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 2 + static_cast<int>(rng_below(rng, 5));
        ColoredMultigraph g = random_multigraph(rng, n, static_cast<int>(rng_below(rng, 10)));
        for (int t = 1; t <= 2; ++t) {
            bool naive = true;
            for_each_partition(n, 2, n, [&](const VertexPartition& p) {
                if (crossing_count(g, p) < t * (p.block_count() - 1)) naive = false;
            });
            PackingCheck check = packing_feasible(g, t);
            CHECK(check.feasible == naive);
            if (!check.feasible) {
                const VertexPartition& w = *check.violator;
                CHECK(crossing_count(g, w) < t * (w.block_count() - 1));
            }
        }
    }
}

TEST_CASE("r_general on K_4") {
    AntiRamseyResult r = r_general(complete_graph(4), 1);
    CHECK(r.branch == GeneralBranch::PartitionMax);
    CHECK(r.value == 2);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == VertexPartition::from_blocks(4, {{0, 1}, {2}, {3}}));
}

TEST_CASE("r_general on a disconnected host") {
    ColoredMultigraph two_k2(4, {{0, 1, -1}, {2, 3, -1}}, 0);
    for (int t = 1; t <= 3; ++t) {
        AntiRamseyResult r = r_general(two_k2, t);
        CHECK(r.branch == GeneralBranch::PackingInfeasible);
        CHECK(r.value == 2);
    }
}

TEST_CASE("r_general matches the multipartite formula on K_{2,2,2}") {
    AntiRamseyResult r = r_general(multipartite_graph({2, 2, 2}), 1);
    CHECK(r.branch == GeneralBranch::PartitionMax);
    CHECK(r.value == 6);
    CHECK(r.value == r_multipartite(MultipartiteShape::of({2, 2, 2}), 1).value);
}

TEST_CASE("r_general matches r_complete on K_n") {
    for (int n = 3; n <= 9; ++n)
        for (int t = 1; t <= 5; ++t) {
            AntiRamseyResult general = r_general(complete_graph(n), t);
            AntiRamseyValue formula = r_complete(n, t);
            REQUIRE(general.has_value());
            REQUIRE(formula.has_value());
            CHECK(general.value == formula.value);
        }
}

TEST_CASE("degenerate hosts report no avoiding coloring") {
    // n = 2 with >= t parallel edges packs t single-edge spanning trees and
    // the maximization domain |P| >= 3 is empty.
    ColoredMultigraph doubled(2, {{0, 1, -1}, {0, 1, -1}}, 0);
    CHECK(r_general(doubled, 1).branch == GeneralBranch::NoAvoidingColoring);
    CHECK(r_general(doubled, 2).branch == GeneralBranch::NoAvoidingColoring);
    AntiRamseyResult r = r_general(doubled, 3);  // 2 < 3 edges: packing fails
    CHECK(r.branch == GeneralBranch::PackingInfeasible);
    CHECK(r.value == 2);
    CHECK(r_general(ColoredMultigraph(1, {}, 0), 1).branch ==
          GeneralBranch::NoAvoidingColoring);
}

TEST_CASE("avoiding_coloring_exists thresholds") {
    ColoredMultigraph k4 = complete_graph(4);
    CHECK(avoiding_coloring_exists(k4, 1, 2));
    CHECK_FALSE(avoiding_coloring_exists(k4, 1, 3));
    ColoredMultigraph two_k2(4, {{0, 1, -1}, {2, 3, -1}}, 0);
    CHECK(avoiding_coloring_exists(two_k2, 1, 2));  // k = |E|, packing infeasible
    CHECK_THROWS_AS(avoiding_coloring_exists(k4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(avoiding_coloring_exists(k4, 1, 7), std::invalid_argument);
}

TEST_CASE("value dominates every partition bound") {
    // r >= |E(P,G)| + t(|P|-2) for every P with |P| >= 3 (the lower-bound
    // side of the formula).
    Rng rng(31337);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + static_cast<int>(rng_below(rng, 4));
        ColoredMultigraph g = random_multigraph(rng, n, 3 + static_cast<int>(rng_below(rng, 8)));
        int t = 1 + static_cast<int>(rng_below(rng, 2));
        AntiRamseyResult r = r_general(g, t);
        if (r.branch != GeneralBranch::PartitionMax) continue;
        for_each_partition(n, 3, n, [&](const VertexPartition& p) {
            CHECK(r.value >= noncrossing_count(g, p) + 1LL * t * (p.block_count() - 2));
        });
    }
}

TEST_CASE("adding an edge moves the maximum by at most one") {
    Rng rng(555);
    int checked = 0;
    for (int iter = 0; iter < 60 && checked < 25; ++iter) {
        int n = 3 + static_cast<int>(rng_below(rng, 4));
        ColoredMultigraph g = random_multigraph(rng, n, 3 + static_cast<int>(rng_below(rng, 6)));
        int t = 1 + static_cast<int>(rng_below(rng, 2));
        AntiRamseyResult before = r_general(g, t);
        if (before.branch != GeneralBranch::PartitionMax) continue;

        int u = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n)));
        int v = static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(n - 1)));
        if (v >= u) ++v;
        std::vector<Edge> edges = g.edges();
        edges.push_back(Edge{u, v, -1});
        AntiRamseyResult after = r_general(ColoredMultigraph(n, edges, 0), t);
        REQUIRE(after.branch == GeneralBranch::PartitionMax);  // packing only improves
        CHECK(after.value >= before.value);
        CHECK(after.value <= before.value + 1);
        ++checked;
    }
    CHECK(checked > 0);
}
