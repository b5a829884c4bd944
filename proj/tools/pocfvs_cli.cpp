#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pocfvs/constructive.hpp"
#include "pocfvs/cover.hpp"
#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/harness.hpp"
#include "pocfvs/iso.hpp"
#include "pocfvs/solvers.hpp"

using namespace pocfvs;

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceError = 3;
constexpr int kExitInternalError = 4;

// Edge-list files: first token n, then pairs u v. Files whose first line
// starts with ">>graph6<<" or is a single non-numeric token are graph6.
Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream probe(text);
    std::string first;
    probe >> first;
    if (first.empty()) throw InputError("'" + path + "' is empty");
    const bool numeric = first.find_first_not_of("0123456789") == std::string::npos;
    if (!numeric) {
        std::istringstream lines(text);
        const auto graphs = read_graph6(lines);
        if (graphs.empty()) throw InputError("'" + path + "' holds no graph");
        return graphs.front();
    }
    const int n = std::stoi(first);
    if (n > kMaxVertices) throw ResourceError("graph has more than " + std::to_string(kMaxVertices) + " vertices");
    Graph g(n);
    int u = 0;
    int v = 0;
    while (probe >> u) {
        if (!(probe >> v)) throw InputError("odd number of endpoints in '" + path + "'");
        g.add_edge(u, v);
    }
    return g;
}

Graph load_graph(const std::string& source) {
    if (source.rfind("file:", 0) == 0) return read_graph_file(source.substr(5));
    if (source.rfind("g6:", 0) == 0) return from_graph6(source.substr(3));
    return parse_graph_spec(source);
}

std::vector<Graph> load_family(const std::string& text) {
    std::vector<Graph> out;
    for (const auto& item : split_spec_list(text)) out.push_back(load_graph(item));
    if (out.empty()) throw InputError("empty graph list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) throw InputError("range must look like a..b");
    try {
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw InputError("range must look like a..b");
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (content.empty() || content.back() != '\n') out << '\n';
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Price of connectivity for feedback vertex set: solvers, cover decisions, constructions"};
    app.require_subcommand(1);
    app.fallthrough();
    int max_vertices = 0;
    app.add_option("--max-vertices", max_vertices, "Solver vertex limit (default from POCFVS_MAX_VERTICES or 20)");

    int exit_code = 0;
    auto limits = [&] {
        SolverLimits l = limits_from_environment();
        if (max_vertices > 0) l.max_vertices = max_vertices;
        return l;
    };

    // solve
    auto* solve = app.add_subcommand("solve", "Exact fvs / cfvs / ds / cds of a graph");
    std::string solve_source;
    bool want_fvs = false, want_cfvs = false, want_ds = false, want_cds = false;
    solve->add_option("graph", solve_source, "Generator spec, g6:<line> or file:<path>")->required();
    solve->add_flag("--fvs", want_fvs);
    solve->add_flag("--cfvs", want_cfvs);
    solve->add_flag("--ds", want_ds);
    solve->add_flag("--cds", want_cds);
    solve->callback([&] {
        const Graph g = load_graph(solve_source);
        if (!want_fvs && !want_cfvs && !want_ds && !want_cds) want_fvs = want_cfvs = true;
        std::cout << "graph n=" << g.vertex_count() << " m=" << g.edge_count() << " g6=" << to_graph6(g) << '\n';
        auto show = [](const char* name, const SolveResult& r) {
            std::cout << name << ' ' << r.optimum << " witness " << r.witness.to_string() << " explored " << r.explored
                      << '\n';
        };
        if (want_fvs) show("fvs", min_fvs(g, limits()));
        if (want_cfvs) show("cfvs", min_cfvs(g, limits()));
        if (want_ds) show("ds", min_ds(g, limits()));
        if (want_cds) show("cds", min_cds(g, limits()));
    });

    // covers
    auto* covers = app.add_subcommand("covers", "Does the family cover the pair (i, j)?");
    std::string covers_spec;
    int ci = 0, cj = 0;
    bool brute = false, symbolic = false, both = false;
    covers->add_option("family", covers_spec, "Comma-separated graph specs")->required();
    covers->add_option("i", ci)->required();
    covers->add_option("j", cj)->required();
    auto* brute_flag = covers->add_flag("--brute", brute, "Embedding search in B_{i,j,N}");
    auto* symbolic_flag = covers->add_flag("--symbolic", symbolic, "Covered-pair set of the structure profile");
    auto* both_flag = covers->add_flag("--both", both, "Run both and require agreement");
    brute_flag->excludes(symbolic_flag)->excludes(both_flag);
    symbolic_flag->excludes(both_flag);
    covers->callback([&] {
        if (ci < 3 || cj < 3) throw InputError("cycle lengths must be at least 3");
        const auto family = load_family(covers_spec);
        if (!brute && !symbolic) both = true;
        std::optional<bool> b, s;
        if (brute || both) b = covers_bruteforce_family(family, ci, cj);
        if (symbolic || both) {
            PairSet set;
            for (const auto& h : family) set.unite(covered_pairs(h));
            s = set.contains(ci, cj);
        }
        if (b) std::cout << "brute " << yes_no(*b) << '\n';
        if (s) std::cout << "symbolic " << yes_no(*s) << '\n';
        if (b && s) {
            std::cout << (*b == *s ? "agree" : "MISMATCH") << '\n';
            if (*b != *s) exit_code = kExitVerificationFailure;
        }
    });

    // table
    auto* table = app.add_subcommand("table", "Tick grid of covered pairs");
    std::string table_spec;
    std::string table_range = "3..12";
    table->add_option("graph", table_spec)->required();
    table->add_option("--range", table_range, "a..b");
    table->callback([&] {
        const auto [lo, hi] = parse_range(table_range);
        PairSet set;
        for (const auto& h : load_family(table_spec)) set.unite(covered_pairs(h));
        std::cout << "covered: " << set.to_string() << '\n' << render_table(set, lo, hi);
    });

    // classify
    auto* classify = app.add_subcommand("classify", "Tetrachotomy class of H, or the verdict for a pair {H1, H2}");
    std::vector<std::string> classify_specs;
    classify->add_option("graphs", classify_specs, "One or two graph specs")->required()->expected(1, 2);
    classify->callback([&] {
        if (classify_specs.size() == 1) {
            const Graph h = load_graph(classify_specs[0]);
            const auto r = tetrachotomy_classify(h);
            std::cout << r.to_string() << '\n';
            for (const auto& w : unboundedness_witnesses(h, 3, limits())) {
                std::cout << "witness " << w.label << " fvs " << w.fvs << " cfvs " << w.cfvs << '\n';
            }
        } else {
            std::cout << classify_pair(load_graph(classify_specs[0]), load_graph(classify_specs[1])).to_string()
                      << '\n';
        }
    });

    auto* classify_family = app.add_subcommand("classify-family", "Bounded or unbounded for a finite family");
    std::string family_spec;
    classify_family->add_option("family", family_spec, "Comma-separated graph specs")->required();
    classify_family->callback([&] {
        const auto family = load_family(family_spec);
        const auto r = family_covers_all(family);
        std::cout << r.to_string() << '\n';
        if (r.verdict == Verdict::bounded) {
            const auto m = must_contain_check(family);
            std::cout << "member in 2 D_l^3: #" << m.double_tadpole_member << ", member in T+T': #"
                      << m.double_spider_member << '\n';
        }
    });

    // connectify
    auto* connectify = app.add_subcommand("connectify", "Run a connectification procedure");
    std::string conn_source, method = "paths", trace_path;
    int s_param = -1;
    bool prune = false;
    connectify->add_option("graph", conn_source)->required();
    connectify->add_option("--method", method)->check(CLI::IsMember({"paths", "p5", "sp3"}));
    connectify->add_option("--s", s_param, "Freeness parameter s");
    connectify->add_option("--trace", trace_path, "Write the trace as JSON");
    connectify->add_flag("--prune-leaves", prune, "Remove degree <= 1 vertices repeatedly first");
    connectify->callback([&] {
        Graph g = load_graph(conn_source);
        std::vector<int> original;
        if (prune) {
            InducedSubgraph pruned = prune_leaves(g);
            std::cout << "pruned " << g.vertex_count() - pruned.graph.vertex_count()
                      << " vertices; sets below use the pruned graph's labels\n";
            g = std::move(pruned.graph);
            original = std::move(pruned.original);
        }
        ConnectifyResult r;
        if (method == "paths") {
            r = connectify_by_paths(g, min_fvs(g, limits()).witness);
        } else if (method == "p5") {
            if (s_param < 0) throw InputError("--method p5 needs --s");
            r = connectify_p5sp1(g, s_param, limits());
        } else {
            if (s_param < 1) throw InputError("--method sp3 needs --s >= 1");
            r = connectify_sp3(g, s_param, limits());
        }
        std::cout << "set " << r.set.to_string() << '\n';
        if (!original.empty()) {
            VertexSet mapped;
            for (int v : r.set) mapped.insert(original[static_cast<std::size_t>(v)]);
            std::cout << "set (input labels) " << mapped.to_string() << '\n';
        }
        std::cout
                  << "size " << r.set.size() << '\n'
                  << "fvs " << r.trace.fvs << '\n'
                  << "bound " << r.trace.claimed_bound << " (" << r.trace.bound_expression << ")\n";
        if (!trace_path.empty()) {
            write_file(trace_path, r.trace.to_json());
        } else {
            std::cout << r.trace.to_text();
        }
    });

    // explore
    auto* explore = app.add_subcommand("explore", "Max cfvs/fvs and cfvs-fvs over enumerated or supplied graphs");
    int n_max = 0, n_min = 1, threads = 0;
    std::string forbid, g6_in, out_path;
    bool no_timestamp = false;
    explore->add_option("--n-max", n_max, "Largest vertex count (<= 9)");
    explore->add_option("--n-min", n_min, "Smallest vertex count");
    explore->add_option("--forbid", forbid, "Comma-separated forbidden induced subgraphs");
    explore->add_option("--g6-in", g6_in, "Evaluate graphs from a graph6 file instead of enumerating");
    explore->add_option("--out", out_path, "Write the JSON report here");
    explore->add_option("--threads", threads, "Worker threads (0 = all cores)");
    explore->add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field from the JSON report");
    explore->callback([&] {
        ExperimentReport report;
        std::vector<Graph> forbidden;
        if (!forbid.empty()) forbidden = load_family(forbid);
        if (!g6_in.empty()) {
            std::ifstream in(g6_in);
            if (!in) throw InputError("cannot open '" + g6_in + "'");
            std::vector<Graph> graphs;
            for (Graph& g : read_graph6(in)) {
                if (g.vertex_count() < n_min || (n_max > 0 && g.vertex_count() > n_max)) continue;
                if (!is_connected(g)) throw InputError("graph " + to_graph6(g) + " is not connected");
                if (is_free(g, forbidden)) graphs.push_back(std::move(g));
            }
            report = evaluate_graphs(graphs, limits(), threads);
            report.description = "graphs from " + g6_in;
        } else {
            if (n_max < 1) throw InputError("--n-max is required without --g6-in");
            EnumerationSpec spec;
            spec.min_vertices = n_min;
            spec.max_vertices = n_max;
            spec.forbidden = forbidden;
            report = max_poc(spec, limits(), threads);
        }
        std::cout << report.to_text();
        if (!out_path.empty()) write_file(out_path, report.to_json(!no_timestamp));
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Cross-validation batteries");
    std::string suite = "all";
    verify->add_option("--suite", suite)->check(CLI::IsMember({"lemmas", "witnesses", "constructive", "all"}));
    verify->callback([&] {
        const VerifyReport r = run_verify(suite);
        std::cout << r.to_text();
        if (!r.all_passed()) exit_code = kExitVerificationFailure;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResourceError;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    }
    return exit_code;
}
