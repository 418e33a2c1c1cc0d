// rt — anti-Ramsey numbers for edge-disjoint rainbow spanning trees.
//
// Subcommands: formula, r-general, check, extremal, oracle, stats, verify.
// Exit codes: 0 ok, 1 discrepancy found, 2 usage/parse error, 3 cap exceeded.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rt/anti_ramsey.hpp"
#include "rt/errors.hpp"
#include "rt/extremal.hpp"
#include "rt/formulas.hpp"
#include "rt/graph.hpp"
#include "rt/io.hpp"
#include "rt/oracle.hpp"
#include "rt/partition_enum.hpp"
#include "rt/rainbow.hpp"
#include "rt/verify.hpp"

using json = nlohmann::json;

namespace {

struct GlobalOptions {
    std::string format = "human";
    int jobs = 1;
    int max_n_exhaustive = rt::kDefaultPartitionCap;
    int oracle_max_edges = rt::kDefaultOracleEdgeCap;
    long long search_budget = 100'000'000;

    bool json_out() const { return format == "json"; }
    rt::SearchLimits limits() const { return rt::SearchLimits{search_budget}; }
};

json partition_json(const rt::VertexPartition& p) {
    json blocks = json::array();
    for (const std::vector<int>& block : p.blocks()) blocks.push_back(block);
    return blocks;
}

json forests_json(const rt::ForestFamily& family) {
    json out = json::array();
    for (const std::vector<int>& f : family.forests) out.push_back(f);
    return out;
}

json formula_json(const rt::AntiRamseyValue& v) {
    json out;
    out["kind"] = rt::to_string(v.kind);
    out["branch"] = v.branch;
    if (v.has_value())
        out["value"] = v.value;
    else
        out["value"] = nullptr;
    return out;
}

void print_formula(const GlobalOptions& opts, const std::string& host, long long t,
                   const rt::AntiRamseyValue& v) {
    if (opts.json_out()) {
        json out = formula_json(v);
        out["host"] = host;
        out["t"] = t;
        std::cout << out.dump(2) << '\n';
        return;
    }
    if (v.has_value())
        std::cout << "r(" << host << ", " << t << ") = " << v.value << "   [" << rt::to_string(v.kind)
                  << ": " << v.branch << "]\n";
    else
        std::cout << "r(" << host << ", " << t
                  << "): no avoiding coloring exists (every coloring contains the trees)\n";
}

std::vector<long long> parse_parts(const std::string& text) {
    std::vector<long long> parts;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ','))
        if (!tok.empty()) parts.push_back(std::stoll(tok));
    if (parts.empty()) throw std::invalid_argument("--parts must list at least one part size");
    return parts;
}

std::pair<long long, long long> parse_range(const std::string& text) {
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        long long v = std::stoll(text);
        return {v, v};
    }
    return {std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
}

int run_verify(const GlobalOptions& opts, int max_n, int max_t, std::uint64_t seed,
               int random_colorings, const std::vector<std::string>& only) {
    using namespace rt::verify;
    auto wanted = [&](const std::string& suite) {
        if (only.empty()) return true;
        for (const std::string& s : only)
            if (s == suite) return true;
        return false;
    };

    std::vector<Report> reports;
    if (wanted("formulas")) {
        reports.push_back(formulas_consistency(std::max(2, max_n), max_t));
        reports.push_back(multipartite_vs_general(std::min(max_n + 3, 9), max_t));
        reports.push_back(split_formula_vs_exhaustive(std::min(max_n + 3, 9)));
    }
    if (wanted("oracle")) {
        std::vector<std::pair<int, int>> cases;
        for (int n = 3; n <= std::min(max_n + 1, 5); ++n)
            for (int t = 1; t <= max_t; ++t)
                if (n * (n - 1) / 2 <= opts.oracle_max_edges) cases.push_back({n, t});
        reports.push_back(formula_vs_oracle(cases, opts.oracle_max_edges));
        reports.push_back(general_vs_oracle(std::min(max_n, 4), max_t, seed, 20, 8,
                                            opts.oracle_max_edges));
    }
    if (wanted("criteria")) {
        reports.push_back(criterion_vs_search(seed, random_colorings));
        reports.push_back(extension_vs_search(seed + 1, std::max(1, random_colorings / 2)));
    }
    if (wanted("extremal")) reports.push_back(extremal_end_to_end(max_t));
    if (wanted("concavity")) reports.push_back(concavity(20));
    if (wanted("seeding")) reports.push_back(seeding_replay(seed + 2, 100));

    bool all_pass = true;
    for (const Report& r : reports) all_pass = all_pass && r.all_pass();

    if (opts.json_out()) {
        json out;
        out["pass"] = all_pass;
        out["suites"] = json::array();
        for (const Report& r : reports) {
            json suite;
            suite["suite"] = r.suite;
            suite["pass"] = r.all_pass();
            suite["checks"] = json::array();
            for (const Check& c : r.checks)
                suite["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            out["suites"].push_back(suite);
        }
        std::cout << out.dump(2) << '\n';
    } else {
        for (const Report& r : reports) {
            std::cout << "== " << r.suite << " ==\n";
            for (const Check& c : r.checks)
                std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name
                          << (c.detail.empty() ? "" : "  (" + c.detail + ")") << '\n';
        }
        std::cout << (all_pass ? "all checks passed" : "DISCREPANCY FOUND") << '\n';
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"anti-Ramsey numbers for t edge-disjoint rainbow spanning trees"};
    app.require_subcommand(1);

    GlobalOptions opts;
    app.add_option("--format", opts.format, "Output format: human, json, csv (sweep only)")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--jobs", opts.jobs, "Worker threads for partition scans")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-n-exhaustive", opts.max_n_exhaustive,
                   "Vertex-count cap for exhaustive partition scans");
    app.add_option("--max-edges", opts.oracle_max_edges, "Edge-count cap for the coloring oracle");
    app.add_option("--budget", opts.search_budget, "Node budget for the tree searches");
    app.set_config("--config");

    // ---- formula ----
    auto* formula = app.add_subcommand("formula", "Closed-form values for complete and "
                                                  "complete multipartite hosts");
    formula->require_subcommand(1);

    long long opt_n = 0, opt_t = 1, opt_p = 0, opt_q = 0;
    std::string opt_parts, opt_trange = "1..1";

    auto* f_complete = formula->add_subcommand("complete", "r(K_n, t)");
    f_complete->add_option("-n", opt_n, "Vertex count")->required();
    f_complete->add_option("-t", opt_t, "Number of trees")->required();

    auto* f_multi = formula->add_subcommand("multipartite", "r(K_{n1,...,nr}, t)");
    f_multi->add_option("--parts", opt_parts, "Comma-separated part sizes, e.g. 4,4")->required();
    f_multi->add_option("-t", opt_t, "Number of trees")->required();

    auto* f_bi = formula->add_subcommand("bipartite", "r(K_{p,q}, t)");
    f_bi->add_option("-p", opt_p, "Larger side")->required();
    f_bi->add_option("-q", opt_q, "Smaller side")->required();
    f_bi->add_option("-t", opt_t, "Number of trees")->required();

    auto* f_sweep = formula->add_subcommand("sweep", "Sweep t over a range for one host");
    f_sweep->add_option("--parts", opt_parts, "Comma-separated part sizes");
    f_sweep->add_option("-n", opt_n, "Complete-graph vertex count (alternative to --parts)");
    f_sweep->add_option("--t-range", opt_trange, "Range a..b, e.g. 1..5")->required();

    // ---- graph-file commands ----
    std::string graph_file, partition_text, forests_file, out_file, mode = "edge-disjoint";
    int cmd_t = 1;
    bool show_witness = false;

    auto* rgen = app.add_subcommand("r-general", "r(G, t) for an arbitrary multigraph");
    rgen->add_option("graph", graph_file, "Graph file")->required();
    rgen->add_option("-t", cmd_t, "Number of trees")->required();
    rgen->add_flag("--witness", show_witness, "Print the witnessing partition");

    auto* check = app.add_subcommand("check", "Decide rainbow spanning structure existence");
    check->add_option("graph", graph_file, "Colored graph file")->required();
    check->add_option("-t", cmd_t, "Number of trees");
    check->add_option("--mode", mode, "edge-disjoint | color-disjoint | extension")
        ->check(CLI::IsMember({"edge-disjoint", "color-disjoint", "extension"}));
    check->add_option("--forests", forests_file, "Forest file (extension mode)");

    auto* extremal = app.add_subcommand("extremal", "Construct an avoiding coloring");
    extremal->add_option("graph", graph_file, "Graph file")->required();
    extremal->add_option("-t", cmd_t, "Number of trees")->required();
    extremal->add_option("--partition", partition_text,
                         "Partition \"0,1|2|3\" (default: the solver witness)");
    extremal->add_option("-o", out_file, "Write the colored graph to this file");

    auto* oracle = app.add_subcommand("oracle", "Brute-force r(G, t) from the definition");
    oracle->add_option("graph", graph_file, "Graph file")->required();
    oracle->add_option("-t", cmd_t, "Number of trees")->required();

    auto* stats = app.add_subcommand("stats", "Partition statistics for a colored graph");
    stats->add_option("graph", graph_file, "Colored graph file")->required();
    stats->add_option("--partition", partition_text, "Partition \"0,1|2|3\"")->required();

    // ---- verify ----
    int v_max_n = 4, v_max_t = 2, v_random = 200;
    std::uint64_t v_seed = 20250810;
    std::vector<std::string> v_only;
    auto* verify = app.add_subcommand("verify", "Run the cross-check suites");
    verify->add_option("--max-n", v_max_n, "Largest vertex count for exhaustive suites");
    verify->add_option("--max-t", v_max_t, "Largest tree count");
    verify->add_option("--seed", v_seed, "Random seed");
    verify->add_option("--random-colorings", v_random, "Instances for the criterion suites");
    verify->add_option("--only", v_only,
                       "Run only these suites: formulas, oracle, criteria, extremal, "
                       "concavity, seeding");

    // Let global flags appear after the subcommand name too.
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) self(sub, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (f_complete->parsed()) {
            print_formula(opts, "K_" + std::to_string(opt_n), opt_t, rt::r_complete(opt_n, opt_t));
        } else if (f_multi->parsed()) {
            rt::MultipartiteShape shape = rt::MultipartiteShape::of(parse_parts(opt_parts));
            print_formula(opts, rt::verify::detail::shape_name(shape), opt_t,
                          rt::r_multipartite(shape, opt_t));
        } else if (f_bi->parsed()) {
            print_formula(opts, "K_{" + std::to_string(opt_p) + "," + std::to_string(opt_q) + "}",
                          opt_t, rt::r_bipartite(opt_p, opt_q, opt_t));
        } else if (f_sweep->parsed()) {
            if (opt_parts.empty() && opt_n == 0)
                throw std::invalid_argument("sweep needs --parts or -n");
            auto [t_lo, t_hi] = parse_range(opt_trange);
            std::string host;
            std::function<rt::AntiRamseyValue(long long)> eval;
            if (!opt_parts.empty()) {
                rt::MultipartiteShape shape = rt::MultipartiteShape::of(parse_parts(opt_parts));
                host = rt::verify::detail::shape_name(shape);
                eval = [shape](long long t) { return rt::r_multipartite(shape, t); };
            } else {
                host = "K_" + std::to_string(opt_n);
                eval = [n = opt_n](long long t) { return rt::r_complete(n, t); };
            }
            if (opts.format == "csv") {
                std::cout << "t,value,kind,branch\n";
                for (long long t = t_lo; t <= t_hi; ++t) {
                    rt::AntiRamseyValue v = eval(t);
                    std::cout << t << ','
                              << (v.has_value() ? std::to_string(v.value) : std::string()) << ','
                              << rt::to_string(v.kind) << ",\"" << v.branch << "\"\n";
                }
            } else if (opts.json_out()) {
                json rows = json::array();
                for (long long t = t_lo; t <= t_hi; ++t) {
                    json row = formula_json(eval(t));
                    row["t"] = t;
                    rows.push_back(row);
                }
                std::cout << json{{"host", host}, {"rows", rows}}.dump(2) << '\n';
            } else {
                for (long long t = t_lo; t <= t_hi; ++t) print_formula(opts, host, t, eval(t));
            }
        } else if (rgen->parsed()) {
            rt::ColoredMultigraph g = rt::read_graph_file(graph_file);
            rt::AntiRamseyResult r = rt::r_general(g, cmd_t, opts.jobs, opts.max_n_exhaustive);
            if (opts.json_out()) {
                json out;
                out["t"] = cmd_t;
                out["branch"] = rt::to_string(r.branch);
                out["value"] = r.has_value() ? json(r.value) : json(nullptr);
                out["witness"] = r.witness ? partition_json(*r.witness) : json(nullptr);
                std::cout << out.dump(2) << '\n';
            } else {
                if (r.has_value())
                    std::cout << "r = " << r.value << "   [" << rt::to_string(r.branch) << "]\n";
                else
                    std::cout << "no avoiding coloring exists\n";
                if (show_witness && r.witness)
                    std::cout << "witness: " << rt::partition_to_string(*r.witness) << '\n';
            }
        } else if (check->parsed()) {
            rt::ColoredMultigraph g = rt::read_graph_file(graph_file);
            json out;
            out["mode"] = mode;
            out["t"] = cmd_t;
            if (mode == "edge-disjoint") {
                rt::TreeSearchResult r = rt::find_edge_disjoint_rainbow_trees(g, cmd_t, opts.limits());
                if (r.status == rt::SearchStatus::BudgetExceeded)
                    throw rt::BudgetExhausted("search budget exhausted; result indeterminate");
                out["found"] = r.found();
                out["nodes"] = r.nodes;
                if (r.found()) out["trees"] = forests_json(r.trees);
                if (!opts.json_out())
                    std::cout << (r.found() ? "found t edge-disjoint rainbow spanning trees"
                                            : "no t edge-disjoint rainbow spanning trees (complete search)")
                              << '\n';
            } else if (mode == "color-disjoint") {
                rt::CriterionCheck r = rt::has_color_disjoint_trees(g, cmd_t, opts.max_n_exhaustive);
                out["satisfied"] = r.satisfied;
                out["blocking"] = r.blocking ? partition_json(*r.blocking) : json(nullptr);
                if (!opts.json_out()) {
                    std::cout << (r.satisfied ? "t color-disjoint rainbow spanning trees exist"
                                              : "blocked")
                              << '\n';
                    if (r.blocking)
                        std::cout << "blocking partition: " << rt::partition_to_string(*r.blocking)
                                  << '\n';
                }
            } else {
                if (forests_file.empty())
                    throw std::invalid_argument("extension mode needs --forests");
                rt::ForestFamily family = rt::read_forests_file(forests_file, g);
                rt::ExtensionCertificate cert =
                    rt::extension_feasible(g, family, opts.max_n_exhaustive);
                bool ok = cert.outcome == rt::ExtensionOutcome::Extendable;
                out["t"] = family.t();
                out["outcome"] = ok ? "extendable" : "blocked";
                out["blocking"] =
                    cert.blocking_partition ? partition_json(*cert.blocking_partition) : json(nullptr);
                if (!ok) {
                    out["lhs"] = cert.lhs;
                    out["rhs"] = cert.rhs;
                }
                if (!opts.json_out()) {
                    std::cout << (ok ? "extendable" : "blocked") << '\n';
                    if (cert.blocking_partition)
                        std::cout << "blocking partition: "
                                  << rt::partition_to_string(*cert.blocking_partition) << " (lhs "
                                  << cert.lhs << " < rhs " << cert.rhs << ")\n";
                }
            }
            if (opts.json_out()) std::cout << out.dump(2) << '\n';
        } else if (extremal->parsed()) {
            rt::ColoredMultigraph g = rt::read_graph_file(graph_file).uncolored();
            rt::ColoredMultigraph colored;
            json out;
            out["t"] = cmd_t;
            if (!partition_text.empty()) {
                rt::VertexPartition p = rt::parse_partition(partition_text, g.vertex_count());
                colored = rt::extremal_coloring(g, cmd_t, p);
                out["partition"] = partition_json(p);
            } else {
                rt::AntiRamseyResult r = rt::r_general(g, cmd_t, opts.jobs, opts.max_n_exhaustive);
                out["branch"] = rt::to_string(r.branch);
                if (r.branch == rt::GeneralBranch::NoAvoidingColoring) {
                    if (opts.json_out())
                        std::cout << json{{"no_avoiding", true}}.dump(2) << '\n';
                    else
                        std::cout << "no avoiding coloring exists for this host\n";
                    return 0;
                }
                if (r.branch == rt::GeneralBranch::PackingInfeasible) {
                    colored = rt::rainbow_coloring(g);
                } else {
                    colored = rt::extremal_coloring(g, cmd_t, *r.witness);
                    out["partition"] = partition_json(*r.witness);
                }
            }
            out["colors"] = colored.used_color_count();
            if (!out_file.empty()) {
                std::ofstream f(out_file);
                rt::write_graph(f, colored);
                out["file"] = out_file;
                if (!opts.json_out())
                    std::cout << "wrote " << out_file << " using " << colored.used_color_count()
                              << " colors\n";
            } else if (!opts.json_out()) {
                rt::write_graph(std::cout, colored);
            }
            if (opts.json_out()) {
                json edges = json::array();
                for (const rt::Edge& e : colored.edges()) edges.push_back({e.u, e.v, e.color});
                out["edges"] = edges;
                std::cout << out.dump(2) << '\n';
            }
        } else if (oracle->parsed()) {
            rt::ColoredMultigraph g = rt::read_graph_file(graph_file).uncolored();
            rt::OracleResult r = rt::r_oracle(g, cmd_t, opts.oracle_max_edges, opts.limits());
            if (opts.json_out()) {
                json out;
                out["t"] = cmd_t;
                out["value"] = r.value ? json(*r.value) : json(nullptr);
                out["colorings_checked"] = r.colorings_checked;
                if (r.witness) {
                    json colors = json::array();
                    for (const rt::Edge& e : r.witness->edges()) colors.push_back(e.color);
                    out["witness"] = colors;
                }
                std::cout << out.dump(2) << '\n';
            } else if (r.value) {
                std::cout << "r = " << *r.value << " (" << r.colorings_checked
                          << " colorings checked)\n";
            } else {
                std::cout << "no avoiding coloring exists\n";
            }
        } else if (stats->parsed()) {
            rt::ColoredMultigraph g = rt::read_graph_file(graph_file);
            rt::VertexPartition p = rt::parse_partition(partition_text, g.vertex_count());
            rt::PartitionStats s = rt::partition_stats(g, p);
            if (opts.json_out()) {
                std::cout << json{{"noncrossing_edges", s.noncrossing_edges},
                                  {"crossing_edges", s.crossing_edges},
                                  {"noncrossing_colors", s.noncrossing_colors},
                                  {"crossing_colors", s.crossing_colors},
                                  {"eta", s.eta},
                                  {"xi", s.xi}}
                                 .dump(2)
                          << '\n';
            } else {
                std::cout << "noncrossing edges  " << s.noncrossing_edges << '\n'
                          << "crossing edges     " << s.crossing_edges << '\n'
                          << "noncrossing colors " << s.noncrossing_colors << '\n'
                          << "crossing colors    " << s.crossing_colors << '\n'
                          << "eta                " << s.eta << '\n'
                          << "xi                 " << s.xi << '\n';
            }
        } else if (verify->parsed()) {
            return run_verify(opts, v_max_n, v_max_t, v_seed, v_random, v_only);
        }
    } catch (const rt::CapExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const rt::BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const rt::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
