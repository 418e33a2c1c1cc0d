#pragma once

// Executable cross-checks: every closed formula, criterion, and construction
// in the library is validated against an independent route (brute-force
// oracle, complete search, or exhaustive partition scan). The CLI `verify`
// command and the acceptance suite both run these.

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rt/anti_ramsey.hpp"
#include "rt/extremal.hpp"
#include "rt/formulas.hpp"
#include "rt/generators.hpp"
#include "rt/graph.hpp"
#include "rt/io.hpp"
#include "rt/oracle.hpp"
#include "rt/partition_enum.hpp"
#include "rt/rainbow.hpp"

namespace rt::verify {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;

    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back(Check{name, pass, detail});
    }
};

namespace detail {

inline std::string shape_name(const MultipartiteShape& shape) {
    std::string s = "K_{";
    for (size_t i = 0; i < shape.parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(shape.parts[i]);
    }
    return s + "}";
}

// Kind-and-value agreement between the closed-form solver and the general
// solver / oracle.
inline bool agree(const AntiRamseyValue& formula, const AntiRamseyResult& general) {
    if (formula.kind == ValueKind::NoAvoiding)
        return general.branch == GeneralBranch::NoAvoidingColoring;
    if (general.branch == GeneralBranch::NoAvoidingColoring) return false;
    return formula.value == general.value;
}

// All labeled connected simple graphs on n vertices.
inline std::vector<ColoredMultigraph> connected_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::vector<ColoredMultigraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << pairs.size()); ++mask) {
        std::vector<Edge> edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask & (1ull << i)) edges.push_back(Edge{pairs[i].first, pairs[i].second, -1});
        ColoredMultigraph g(n, std::move(edges), 0);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace detail

/// r_oracle(K_n, t) == r_complete(n, t) for the given (n, t) pairs.
inline Report formula_vs_oracle(const std::vector<std::pair<int, int>>& complete_cases,
                                int oracle_cap = kDefaultOracleEdgeCap) {
    Report report{"formula-vs-oracle", {}};
    for (auto [n, t] : complete_cases) {
        std::string name = "K_" + std::to_string(n) + " t=" + std::to_string(t);
        OracleResult oracle = r_oracle(complete_graph(n), t, oracle_cap);
        AntiRamseyValue formula = r_complete(n, t);
        bool pass;
        std::ostringstream detail;
        if (formula.kind == ValueKind::NoAvoiding) {
            pass = oracle.no_avoiding();
            detail << "formula: no avoiding coloring, oracle: "
                   << (oracle.no_avoiding() ? "agrees" : "disagrees");
        } else {
            pass = oracle.value.has_value() && *oracle.value == formula.value;
            detail << "formula " << formula.value << " (" << formula.branch << "), oracle "
                   << (oracle.value ? std::to_string(*oracle.value) : std::string("none"));
        }
        report.add(name, pass, detail.str());
    }
    return report;
}

/// r_oracle == r_general (value and branch kind) over every labeled connected
/// simple graph on <= max_n vertices and `random_count` seeded random
/// multigraphs, for t in 1..max_t.
inline Report general_vs_oracle(int max_n, int max_t, std::uint64_t seed, int random_count,
                                int max_random_edges = 8, int oracle_cap = kDefaultOracleEdgeCap) {
    Report report{"general-vs-oracle", {}};
    auto compare = [&](const ColoredMultigraph& g, int t) -> std::pair<bool, std::string> {
        OracleResult oracle = r_oracle(g, t, oracle_cap);
        AntiRamseyResult general = r_general(g, t);
        bool pass;
        if (general.branch == GeneralBranch::NoAvoidingColoring) {
            pass = oracle.no_avoiding();
        } else {
            pass = oracle.value.has_value() && *oracle.value == general.value;
            // The two branch kinds are separated by the value: the partition
            // maximum is always below |E|.
            if (pass)
                pass = (general.branch == GeneralBranch::PackingInfeasible) ==
                       (general.value == g.edge_count());
        }
        std::ostringstream detail;
        detail << "general " << (general.has_value() ? std::to_string(general.value) : "none")
               << " (" << to_string(general.branch) << "), oracle "
               << (oracle.value ? std::to_string(*oracle.value) : std::string("none"));
        return {pass, detail.str()};
    };

    for (int n = 1; n <= max_n; ++n) {
        std::vector<ColoredMultigraph> graphs = detail::connected_graphs(n);
        for (int t = 1; t <= max_t; ++t) {
            int failures = 0;
            std::string first_bad;
            for (size_t i = 0; i < graphs.size(); ++i) {
                auto [pass, detail_str] = compare(graphs[i], t);
                if (!pass && failures++ == 0)
                    first_bad = "graph #" + std::to_string(i) + ": " + detail_str;
            }
            std::ostringstream name;
            name << "all " << graphs.size() << " connected graphs n=" << n << " t=" << t;
            report.add(name.str(), failures == 0,
                       failures ? first_bad : "value and branch kind agree");
        }
    }

    Rng rng(seed);
    for (int i = 0; i < random_count; ++i) {
        int n = 2 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_n - 1)));
        int m = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_random_edges)));
        ColoredMultigraph g = random_multigraph(rng, n, m);
        int t = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_t)));
        auto [pass, detail_str] = compare(g, t);
        report.add("random multigraph #" + std::to_string(i) + " (n=" + std::to_string(n) +
                       ", m=" + std::to_string(m) + ", t=" + std::to_string(t) + ")",
                   pass, detail_str);
    }
    return report;
}

/// r_multipartite == r_general on explicit graphs for every shape with
/// total <= max_n and t in 1..max_t.
inline Report multipartite_vs_general(int max_n, int max_t) {
    Report report{"multipartite-vs-general", {}};
    for (int n = 1; n <= max_n; ++n) {
        for (int t = 1; t <= max_t; ++t) {
            int failures = 0;
            std::string first_bad;
            int cases = 0;
            for (const MultipartiteShape& shape : enumerate_shapes(n)) {
                AntiRamseyValue formula = r_multipartite(shape, t);
                AntiRamseyResult general = r_general(shape.to_graph(), t);
                ++cases;
                if (!detail::agree(formula, general) && failures++ == 0) {
                    std::ostringstream bad;
                    bad << detail::shape_name(shape) << ": formula "
                        << (formula.has_value() ? std::to_string(formula.value) : "none")
                        << " vs general "
                        << (general.has_value() ? std::to_string(general.value) : "none");
                    first_bad = bad.str();
                }
            }
            report.add("all " + std::to_string(cases) + " shapes n=" + std::to_string(n) +
                           " t=" + std::to_string(t),
                       failures == 0, failures ? first_bad : "exact agreement");
        }
    }
    return report;
}

/// Closed-form consistency: r_bipartite == r_multipartite for p,q <= max,
/// the 2t+1-regime closed form, and r_complete == r_multipartite on all-ones
/// shapes.
inline Report formulas_consistency(int max_pq, int max_t, int max_complete_n = 12) {
    Report report{"formulas-consistency", {}};

    int bad_pairs = 0;
    std::string first_bad;
    for (long long p = 1; p <= max_pq; ++p)
        for (long long q = 1; q <= p; ++q)
            for (long long t = 1; t <= max_t; ++t) {
                AntiRamseyValue a = r_bipartite(p, q, t);
                AntiRamseyValue b = r_multipartite(MultipartiteShape::of({p, q}), t);
                bool ok = a.kind == b.kind && (!a.has_value() || a.value == b.value);
                if (ok && p >= q && q >= 2 * t + 1) {
                    long long expected = (p - 2) * q + t + (p == q ? 1 : 0);
                    ok = a.has_value() && a.value == expected;
                }
                if (!ok && bad_pairs++ == 0)
                    first_bad = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                " t=" + std::to_string(t);
            }
    report.add("bipartite == multipartite (p,q <= " + std::to_string(max_pq) + ", t <= " +
                   std::to_string(max_t) + ") incl. 2t+1 regime",
               bad_pairs == 0, bad_pairs ? first_bad : "exact agreement");

    int bad_complete = 0;
    for (long long n = 1; n <= max_complete_n; ++n) {
        MultipartiteShape ones{std::vector<long long>(static_cast<size_t>(n), 1)};
        for (long long t = 1; t <= max_t; ++t) {
            AntiRamseyValue a = r_complete(n, t);
            AntiRamseyValue b = r_multipartite(ones, t);
            if (a.kind != b.kind || (a.has_value() && a.value != b.value)) ++bad_complete;
        }
    }
    report.add("complete == multipartite on all-ones shapes (n <= " +
                   std::to_string(max_complete_n) + ")",
               bad_complete == 0, bad_complete ? std::to_string(bad_complete) + " mismatches"
                                               : "exact agreement");
    return report;
}

/// Criterion for t color-disjoint rainbow spanning trees vs complete search,
/// on seeded random colored graphs.
inline Report criterion_vs_search(std::uint64_t seed, int instances, int max_n = 6,
                                  int max_edges = 10, int max_t = 2) {
    Report report{"criterion-vs-search", {}};
    Rng rng(seed);
    int mismatches = 0, yes = 0, no = 0, produced = 0;
    std::string first_bad;
    while (produced < instances) {
        int n = 2 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_n - 1)));
        ColoredMultigraph host = erdos_renyi(rng, n, 0.4 + 0.2 * rng_below(rng, 3));
        if (host.edge_count() == 0 || host.edge_count() > max_edges) continue;
        int k = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(host.edge_count())));
        ColoredMultigraph g = random_coloring(rng, host, k);
        int t = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_t)));
        ++produced;

        CriterionCheck criterion = has_color_disjoint_trees(g, t);
        TreeSearchResult search = find_color_disjoint_rainbow_trees(g, t);
        (search.found() ? yes : no)++;
        bool ok = search.status != SearchStatus::BudgetExceeded &&
                  criterion.satisfied == search.found();
        if (ok && !criterion.satisfied) {
            const VertexPartition& w = *criterion.blocking;
            ok = crossing_color_count(g, w) < 1LL * t * (w.block_count() - 1);
        }
        if (!ok && mismatches++ == 0)
            first_bad = "instance #" + std::to_string(produced - 1) + " (n=" + std::to_string(n) +
                        ", m=" + std::to_string(g.edge_count()) + ", t=" + std::to_string(t) + ")";
    }
    std::ostringstream detail;
    detail << yes << " positive / " << no << " negative instances";
    report.add(std::to_string(instances) + " random colored graphs, criterion == search",
               mismatches == 0, mismatches ? first_bad : detail.str());
    return report;
}

/// Extension criterion vs complete extension search on seeded random
/// (graph, forest family) instances.
inline Report extension_vs_search(std::uint64_t seed, int instances, int max_n = 5, int max_t = 2) {
    Report report{"extension-vs-search", {}};
    Rng rng(seed);
    int mismatches = 0, yes = 0, no = 0, produced = 0;
    std::string first_bad;
    while (produced < instances) {
        int n = 2 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_n - 1)));
        ColoredMultigraph host = erdos_renyi(rng, n, 0.5 + 0.2 * rng_below(rng, 3));
        if (host.edge_count() == 0) continue;
        int k = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(host.edge_count())));
        ColoredMultigraph g = random_coloring(rng, host, k);
        int t = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(max_t)));
        ForestFamily family = random_forest_family(rng, g, t);
        ++produced;

        ExtensionCertificate cert = extension_feasible(g, family);
        TreeSearchResult search = find_color_disjoint_extension(g, family);
        bool extendable = cert.outcome == ExtensionOutcome::Extendable;
        (search.found() ? yes : no)++;
        bool ok = search.status != SearchStatus::BudgetExceeded && extendable == search.found();
        if (ok && !extendable) ok = cert.lhs < cert.rhs && cert.blocking_partition.has_value();
        if (!ok && mismatches++ == 0)
            first_bad = "instance #" + std::to_string(produced - 1) + " (n=" + std::to_string(n) +
                        ", t=" + std::to_string(t) + ")";
    }
    std::ostringstream detail;
    detail << yes << " extendable / " << no << " blocked instances";
    report.add(std::to_string(instances) + " random (graph, forests), criterion == search",
               mismatches == 0, mismatches ? first_bad : detail.str());
    return report;
}

/// Extremal-coloring construction end to end on the named hosts: exact color
/// count at the solver witness, avoidance certified by complete search, and
/// (for the flagged hosts) every single-class split destroys avoidance.
inline Report extremal_end_to_end(int max_t = 2) {
    Report report{"extremal-end-to-end", {}};
    struct Host {
        std::string name;
        ColoredMultigraph graph;
        bool split_checks;
    };
    std::vector<Host> hosts;
    hosts.push_back({"K_4", complete_graph(4), true});
    hosts.push_back({"K_5", complete_graph(5), true});
    hosts.push_back({"K_6", complete_graph(6), false});
    hosts.push_back({"K_{3,3}", multipartite_graph({3, 3}), true});
    hosts.push_back({"K_{2,2,2}", multipartite_graph({2, 2, 2}), false});

    for (const Host& host : hosts) {
        for (int t = 1; t <= max_t; ++t) {
            std::string name = host.name + " t=" + std::to_string(t);
            AntiRamseyResult r = r_general(host.graph, t);
            if (r.branch != GeneralBranch::PartitionMax) {
                report.add(name, true,
                           std::string("skipped: ") + to_string(r.branch) +
                               " (no |P|>=3 witness to build from)");
                continue;
            }
            ColoredMultigraph colored = extremal_coloring(host.graph, t, *r.witness);
            bool count_ok = colored.used_color_count() == r.value;
            bool avoids = certify_avoiding(colored, t);
            report.add(name, count_ok && avoids,
                       "colors " + std::to_string(colored.used_color_count()) + " (want " +
                           std::to_string(r.value) + "), avoiding " + (avoids ? "yes" : "no"));

            if (host.split_checks) {
                std::vector<std::vector<int>> classes(
                    static_cast<size_t>(colored.color_count()));
                for (int id = 0; id < colored.edge_count(); ++id)
                    classes[static_cast<size_t>(colored.edge(id).color)].push_back(id);
                int splits = 0, surviving = 0;
                for (const std::vector<int>& cls : classes) {
                    if (cls.size() < 2) continue;
                    for (unsigned mask = 1; mask < (1u << (cls.size() - 1)); ++mask) {
                        std::vector<int> colors(static_cast<size_t>(colored.edge_count()));
                        for (int id = 0; id < colored.edge_count(); ++id)
                            colors[static_cast<size_t>(id)] = colored.edge(id).color;
                        for (size_t j = 0; j + 1 < cls.size(); ++j)
                            if (mask & (1u << j))
                                colors[static_cast<size_t>(cls[j])] = colored.color_count();
                        ++splits;
                        if (certify_avoiding(
                                host.graph.with_colors(colors, colored.color_count() + 1), t))
                            ++surviving;
                    }
                }
                report.add(name + ": every class split destroys avoidance", surviving == 0,
                           std::to_string(splits) + " splits, " + std::to_string(surviving) +
                               " still avoiding");
            }
        }
    }
    return report;
}

/// Concavity of f over all shapes with total <= max_n.
inline Report concavity(int max_n = 20) {
    Report report{"concavity", {}};
    long long shapes = 0, failures = 0;
    std::string first_bad;
    for (int n = 1; n <= max_n; ++n)
        for (const MultipartiteShape& shape : enumerate_shapes(n)) {
            ++shapes;
            if (!check_concavity(shape) && failures++ == 0)
                first_bad = detail::shape_name(shape);
        }
    report.add("f(s) - 2f(s+1) + f(s+2) >= 0 over " + std::to_string(shapes) + " shapes (n <= " +
                   std::to_string(max_n) + ")",
               failures == 0, failures ? first_bad : "all concave upward");
    return report;
}

/// Greedy-split f values vs exhaustive partition maximization on explicit
/// graphs, for all shapes with total <= max_n and every block count.
inline Report split_formula_vs_exhaustive(int max_n = 9) {
    Report report{"split-formula-vs-exhaustive", {}};
    for (int n = 1; n <= max_n; ++n) {
        long long cases = 0, failures = 0;
        std::string first_bad;
        for (const MultipartiteShape& shape : enumerate_shapes(n)) {
            ColoredMultigraph g = shape.to_graph();
            for (int s = 1; s <= n; ++s) {
                ++cases;
                auto best = maximize_over_partitions(n, s, s, [&](const VertexPartition& p) {
                    return 1LL * noncrossing_count(g, p);
                });
                if (!best || best->score != f_multipartite(shape, s))
                    if (failures++ == 0)
                        first_bad = detail::shape_name(shape) + " s=" + std::to_string(s);
            }
        }
        report.add("n=" + std::to_string(n) + ": f == exhaustive max over " +
                       std::to_string(cases) + " (shape, s) cases",
                   failures == 0, failures ? first_bad : "exact agreement");
    }
    return report;
}

/// Seeding replay: the greedy distribution reproduces the counting identity
/// sum |F_i| >= (t-1) + |c(union F_i)| in the cases where it is promised, and
/// the seeded family is extendable on instances whose coloring exceeds the
/// partition maximum (so that every partition is covered by the criterion's
/// hypotheses).
inline Report seeding_replay(std::uint64_t seed, int instances) {
    Report report{"seeding-replay", {}};

    {  // Fixed profile, top multiplicity >= t.
        ColoredMultigraph g(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {0, 3, 1}}, 2);
        ForestFamily family = seed_forests(g, 2);
        bool ok = family.edge_total() == 2 && family_colors(g, family).size() == 1 &&
                  family.edge_total() >= (2 - 1) + 1;
        report.add("profile m=(3,1), t=2: one top-color edge per forest", ok,
                   "sum=" + std::to_string(family.edge_total()) + " colors=1");
    }
    {  // Fixed profile, round-robin with wraparound: multiplicities (2,2,2), t=3.
        ColoredMultigraph g(
            7, {{0, 1, 0}, {2, 3, 0}, {0, 2, 1}, {4, 5, 1}, {1, 3, 2}, {5, 6, 2}}, 3);
        ForestFamily family = seed_forests(g, 3);
        int colors = static_cast<int>(family_colors(g, family).size());
        bool ok = family.edge_total() == 6 && colors == 3 &&
                  family.edge_total() >= (3 - 1) + colors;
        for (const std::vector<int>& f : family.forests) ok = ok && f.size() == 2;
        report.add("profile m=(2,2,2), t=3: round-robin fills every forest", ok,
                   "sum=" + std::to_string(family.edge_total()) + " colors=" +
                       std::to_string(colors));
    }

    Rng rng(seed);
    int produced = 0, identity_checked = 0, extendable = 0, blocked = 0, skipped = 0;
    std::string first_bad;
    int failures = 0;
    while (produced < instances) {
        int n = 3 + static_cast<int>(rng_below(rng, 3));  // n in 3..5
        ColoredMultigraph host = erdos_renyi(rng, n, 0.6 + 0.2 * rng_below(rng, 2));
        int t = 1 + static_cast<int>(rng_below(rng, 3));
        if (!packing_feasible(host, t).feasible) continue;
        AntiRamseyResult r = r_general(host, t);
        if (r.branch != GeneralBranch::PartitionMax) continue;
        int colors = static_cast<int>(r.value) + 1;
        if (colors >= host.edge_count()) continue;  // need a repeated color
        ColoredMultigraph g = random_surjective_coloring(rng, host, colors);

        // Every bipartition must keep fewer non-crossing edges than there are
        // colors, so the |P| = 2 case of the hypotheses is available.
        bool bipartitions_ok = true;
        for_each_partition(n, 2, 2, [&](const VertexPartition& p) {
            if (noncrossing_count(g, p) >= colors) bipartitions_ok = false;
        });
        if (!bipartitions_ok) continue;
        ++produced;

        ForestFamily family = seed_forests(g, t);
        std::vector<int> multiplicity(static_cast<size_t>(g.color_count()), 0);
        for (const Edge& e : g.edges()) ++multiplicity[static_cast<size_t>(e.color)];
        int top = 0, repeated_edges = 0;
        for (int c = 0; c < g.color_count(); ++c) {
            top = std::max(top, multiplicity[static_cast<size_t>(c)]);
            if (multiplicity[static_cast<size_t>(c)] >= 2)
                repeated_edges += multiplicity[static_cast<size_t>(c)];
        }
        bool case1 = top >= t;
        bool all_full = true;
        for (const std::vector<int>& f : family.forests) all_full = all_full && f.size() >= 2;
        bool all_placed = family.edge_total() == repeated_edges;

        bool ok = true;
        if (case1 || all_full) {
            ++identity_checked;
            int fam_colors = static_cast<int>(family_colors(g, family).size());
            ok = family.edge_total() >= (t - 1) + fam_colors;
        }
        if (ok && (case1 || all_full || all_placed)) {
            ExtensionCertificate cert = extension_feasible(g, family);
            ok = cert.outcome == ExtensionOutcome::Extendable;
            (ok ? extendable : blocked)++;
        } else if (ok) {
            ++skipped;  // greedy skipped edges; neither guarantee applies
        }
        if (!ok && failures++ == 0)
            first_bad = "instance #" + std::to_string(produced - 1) + " (n=" + std::to_string(n) +
                        ", t=" + std::to_string(t) + ", colors=" + std::to_string(colors) + ")";
    }
    std::ostringstream detail;
    detail << identity_checked << " identity checks, " << extendable << " extendable, " << blocked
           << " blocked, " << skipped << " outside both guarantees";
    report.add(std::to_string(instances) + " seeded instances above the partition maximum",
               failures == 0, failures ? first_bad : detail.str());
    return report;
}

}  // namespace rt::verify
