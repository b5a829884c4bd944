#include "pocfvs/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <istream>
#include <map>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "pocfvs/constructive.hpp"
#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"

namespace pocfvs {

// Enumeration ------------------------------------------------------------

void for_each_connected(const EnumerationSpec& spec, const std::function<void(const Graph&)>& visit) {
    if (!spec.connected) throw InputError("only connected enumeration is supported");
    if (spec.max_vertices > kMaxEnumerationVertices) {
        throw ResourceError("enumeration is limited to " + std::to_string(kMaxEnumerationVertices) + " vertices");
    }
    if (spec.max_vertices < 1 || spec.min_vertices > spec.max_vertices) return;

    std::vector<Graph> level;
    if (is_free(Graph(1), spec.forbidden)) level.emplace_back(1);
    for (int n = 1;; ++n) {
        if (n >= spec.min_vertices) {
            for (const Graph& g : level) visit(g);
        }
        if (n == spec.max_vertices || level.empty()) break;
        std::map<CanonicalForm, Graph> next;
        std::unordered_set<CanonicalForm, CanonicalFormHash> rejected;
        for (const Graph& g : level) {
            const Mask limit = Mask{1} << n;
            for (Mask nb = 1; nb < limit; ++nb) {
                Graph h(n + 1);
                for (auto [a, b] : g.edges()) h.add_edge(a, b);
                for (int v : VertexSet(nb)) h.add_edge(v, n);
                CanonicalForm form = canonical_form(h);
                if (next.count(form) || rejected.count(form)) continue;
                if (!is_free(h, spec.forbidden)) {
                    rejected.insert(std::move(form));
                    continue;
                }
                Graph rep = canonical_graph(h);
                next.emplace(std::move(form), std::move(rep));
            }
        }
        level.clear();
        for (auto& [form, g] : next) level.push_back(std::move(g));
    }
}

std::vector<Graph> enumerate_connected(const EnumerationSpec& spec) {
    std::vector<Graph> out;
    for_each_connected(spec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> enumerate_connected(int n_max, const std::vector<Graph>& forbidden) {
    EnumerationSpec spec;
    spec.max_vertices = n_max;
    spec.forbidden = forbidden;
    return enumerate_connected(spec);
}

// Experiments ------------------------------------------------------------

void ExperimentReport::fold() {
    max_ratio.reset();
    max_difference = 0;
    argmax_ratio = -1;
    argmax_difference = -1;
    forest_count = 0;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const GraphRecord& r = records[k];
        if (!r.ratio) {
            ++forest_count;
        } else if (!max_ratio || *r.ratio > *max_ratio) {
            max_ratio = r.ratio;
            argmax_ratio = static_cast<int>(k);
        }
        if (argmax_difference < 0 || r.difference > max_difference) {
            max_difference = r.difference;
            argmax_difference = static_cast<int>(k);
        }
    }
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::json record_json(const GraphRecord& r) {
    return {{"graph6", to_graph6(r.graph)},
            {"vertices", r.graph.vertex_count()},
            {"edges", r.graph.edge_count()},
            {"fvs", r.fvs},
            {"cfvs", r.cfvs},
            {"ratio", r.ratio ? nlohmann::json(r.ratio->to_string()) : nlohmann::json(nullptr)},
            {"difference", r.difference}};
}

}  // namespace

std::string ExperimentReport::to_json(bool include_timestamp) const {
    nlohmann::json j;
    j["description"] = description;
    if (include_timestamp) j["timestamp"] = utc_timestamp();
    j["graph_count"] = records.size();
    j["forest_count"] = forest_count;
    j["max_ratio"] = max_ratio ? nlohmann::json(max_ratio->to_string()) : nlohmann::json(nullptr);
    j["max_difference"] = max_difference;
    j["argmax_ratio"] = argmax_ratio >= 0 ? record_json(records[static_cast<std::size_t>(argmax_ratio)])
                                          : nlohmann::json(nullptr);
    j["argmax_difference"] = argmax_difference >= 0
                                 ? record_json(records[static_cast<std::size_t>(argmax_difference)])
                                 : nlohmann::json(nullptr);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : records) rows.push_back(record_json(r));
    j["records"] = rows;
    return j.dump(2);
}

std::string ExperimentReport::to_text() const {
    std::ostringstream os;
    os << description << '\n';
    os << "graphs " << records.size() << ", forests (ratio undefined) " << forest_count << '\n';
    os << "max cfvs/fvs  " << (max_ratio ? max_ratio->to_string() : "-");
    if (argmax_ratio >= 0) os << "  at " << to_graph6(records[static_cast<std::size_t>(argmax_ratio)].graph);
    os << '\n';
    os << "max cfvs-fvs  " << max_difference;
    if (argmax_difference >= 0) {
        os << "  at " << to_graph6(records[static_cast<std::size_t>(argmax_difference)].graph);
    }
    os << '\n';
    std::map<int, std::pair<int, int>> by_n;  // n -> (count, max difference)
    for (const auto& r : records) {
        auto& slot = by_n[r.graph.vertex_count()];
        ++slot.first;
        slot.second = std::max(slot.second, r.difference);
    }
    os << "   n  graphs  max-diff\n";
    for (const auto& [n, v] : by_n) {
        char line[64];
        std::snprintf(line, sizeof line, "%4d  %6d  %8d\n", n, v.first, v.second);
        os << line;
    }
    return os.str();
}

ExperimentReport evaluate_graphs(const std::vector<Graph>& graphs, SolverLimits limits, int threads) {
    ExperimentReport report;
    report.records.resize(graphs.size());
    if (threads <= 0) threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
    threads = std::min<int>(threads, static_cast<int>(std::max<std::size_t>(1, graphs.size())));
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
        try {
            for (std::size_t k = next++; k < graphs.size() && !failed; k = next++) {
                GraphRecord& r = report.records[k];
                r.graph = graphs[k];
                r.canonical = canonical_form(r.graph);
                r.fvs = min_fvs(r.graph, limits).optimum;
                r.cfvs = min_cfvs(r.graph, limits).optimum;
                r.difference = r.cfvs - r.fvs;
                if (r.fvs > 0) r.ratio = Rational(r.cfvs, r.fvs);
            }
        } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    report.fold();
    return report;
}

ExperimentReport max_poc(const EnumerationSpec& spec, SolverLimits limits, int threads) {
    ExperimentReport report = evaluate_graphs(enumerate_connected(spec), limits, threads);
    std::ostringstream d;
    d << "connected graphs with " << spec.min_vertices << ".." << spec.max_vertices << " vertices";
    if (!spec.forbidden.empty()) {
        d << ", free of";
        for (const auto& h : spec.forbidden) d << ' ' << to_graph6(h);
    }
    report.description = d.str();
    return report;
}

// Classification ----------------------------------------------------------

ClassificationResult tetrachotomy_classify(const Graph& h) {
    const int n = h.vertex_count();
    ClassificationResult out;
    out.verdict = Verdict::bounded;
    if (is_induced_subgraph(h, path(3))) {
        out.tetrachotomy_class = 1;
        out.witness = "induced subgraph of P3: cfvs = fvs on every connected H-free graph";
        return out;
    }
    const Graph p5_host = disjoint_union(path(5), edgeless(n));
    const Graph p3_host = copies(std::max(n, 1), path(3));
    if (is_induced_subgraph(h, p5_host)) {
        out.tetrachotomy_class = 2;
        out.witness = "induced subgraph of P5+" + std::to_string(n) + "P1: cfvs - fvs bounded by a constant";
        return out;
    }
    if (is_induced_subgraph(h, p3_host)) {
        out.tetrachotomy_class = 2;
        out.witness = "induced subgraph of " + std::to_string(n) + "P3: cfvs - fvs bounded by a constant";
        return out;
    }
    if (is_linear_forest(h)) {
        out.tetrachotomy_class = 3;
        out.witness = "linear forest: cfvs/fvs bounded, additive gap unbounded (hourglass chains L_k)";
        return out;
    }
    out.tetrachotomy_class = 4;
    out.verdict = Verdict::unbounded;
    out.covered = covered_pairs(h);
    out.uncovered_pair = out.covered.first_uncovered();
    out.witness = "not a linear forest: contains a cycle or a vertex of degree >= 3";
    if (out.uncovered_pair) {
        out.witness += "; butterflies B_{" + std::to_string(out.uncovered_pair->first) + "," +
                       std::to_string(out.uncovered_pair->second) + ",k} avoid it";
    }
    return out;
}

namespace {

Witness annotate(std::string label, Graph g, SolverLimits limits) {
    limits.max_vertices = std::max(limits.max_vertices, g.vertex_count());
    Witness w{std::move(label), std::move(g), 0, 0};
    w.fvs = min_fvs(w.graph, limits).optimum;
    w.cfvs = min_cfvs(w.graph, limits).optimum;
    return w;
}

}  // namespace

std::vector<Witness> unboundedness_witnesses(const Graph& h, int count, SolverLimits limits) {
    if (count < 0) throw InputError("witness count must be non-negative");
    std::vector<Witness> out;
    const int cls = *tetrachotomy_classify(h).tetrachotomy_class;
    if (cls == 1 || count == 0) return out;
    if (cls == 2) {
        for (int l = 3; l <= 6 && static_cast<int>(out.size()) < count; ++l) {
            Graph g = complete_bipartite(3, l);
            if (!is_induced_subgraph(h, g)) out.push_back(annotate("K3," + std::to_string(l), g, limits));
        }
        if (static_cast<int>(out.size()) < count && !is_induced_subgraph(h, three_p1_witness())) {
            out.push_back(annotate("threeP1", three_p1_witness(), limits));
        }
        return out;
    }
    if (cls == 3) {
        const std::vector<Graph> family{path(6), disjoint_union(path(4), path(2)), h};
        for (int k = 1; k <= count; ++k) {
            Graph g = hourglass_chain(k);
            if (!is_free(g, family)) throw InternalError("L_" + std::to_string(k) + " contains P6, P4+P2 or h");
            out.push_back(annotate("L" + std::to_string(k), g, limits));
        }
        return out;
    }
    const auto pair = covered_pairs(h).first_uncovered();
    if (!pair) throw InternalError("class 4 graph covers every pair");
    const auto [i, j] = *pair;
    const int k_cap = kMaxVertices - i - j + 1;
    for (int k = 1; k <= k_cap && static_cast<int>(out.size()) < count; ++k) {
        Graph g = butterfly(i, j, k);
        if (is_induced_subgraph(h, g)) continue;
        out.push_back(annotate("butterfly:" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k),
                               g, limits));
    }
    return out;
}

std::string GPrimeReport::to_json() const {
    nlohmann::json j;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : this->rows) {
        rows.push_back({{"t", r.t},
                        {"vertices", r.vertex_count},
                        {"fvs", r.fvs},
                        {"cfvs", r.cfvs},
                        {"patterns_checked", r.patterns_checked},
                        {"butterfly_free", r.butterfly_free}});
    }
    j["rows"] = rows;
    j["fvs_constant_two"] = fvs_constant_two;
    j["cfvs_strictly_increasing"] = cfvs_strictly_increasing;
    j["all_butterfly_free"] = all_butterfly_free;
    return j.dump(2);
}

std::string GPrimeReport::to_text() const {
    std::ostringstream os;
    os << "   t     n   fvs  cfvs  patterns  butterfly-free\n";
    for (const auto& r : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%4d  %4d  %4d  %4d  %8d  %s\n", r.t, r.vertex_count, r.fvs, r.cfvs,
                      r.patterns_checked, r.butterfly_free ? "yes" : "NO");
        os << line;
    }
    os << "fvs constant 2: " << (fvs_constant_two ? "yes" : "no")
       << "; cfvs strictly increasing: " << (cfvs_strictly_increasing ? "yes" : "no") << '\n';
    return os.str();
}

GPrimeReport gprime_experiment(int t_max, int max_pattern_vertices, SolverLimits limits) {
    if (t_max < 1) throw InputError("t_max must be at least 1");
    std::vector<Graph> patterns;
    for (int i = 3; i <= max_pattern_vertices; ++i)
        for (int j = i; i + j <= max_pattern_vertices; ++j)
            for (int k = 1; i + j + k - 1 <= max_pattern_vertices; ++k) patterns.push_back(butterfly(i, j, k));
    GPrimeReport report;
    report.fvs_constant_two = true;
    report.cfvs_strictly_increasing = true;
    report.all_butterfly_free = true;
    for (int t = 1; t <= t_max; ++t) {
        const Graph g = gprime_uniform(t);
        SolverLimits lim = limits;
        lim.max_vertices = std::max(lim.max_vertices, g.vertex_count());
        GPrimeRow row;
        row.t = t;
        row.vertex_count = g.vertex_count();
        row.fvs = min_fvs(g, lim).optimum;
        row.cfvs = min_cfvs(g, lim).optimum;
        row.patterns_checked = static_cast<int>(patterns.size());
        row.butterfly_free = is_free(g, patterns);
        report.fvs_constant_two &= row.fvs == 2;
        report.all_butterfly_free &= row.butterfly_free;
        if (!report.rows.empty()) report.cfvs_strictly_increasing &= row.cfvs > report.rows.back().cfvs;
        report.rows.push_back(row);
    }
    return report;
}

// graph6 -------------------------------------------------------------------

std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    int acc = 0;
    int bits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph from_graph6(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' ')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) throw InputError("empty graph6 string");
    for (char c : line) {
        if (c < 63 || c > 126) throw InputError("invalid graph6 character in '" + raw + "'");
    }
    std::size_t pos = 0;
    int n = 0;
    if (line[0] != '~') {
        n = line[0] - 63;
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~') throw InputError("graph6 graphs this large are not supported");
        if (line.size() < 4) throw InputError("truncated graph6 header in '" + raw + "'");
        for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | (line[k] - 63);
        pos = 4;
    }
    if (n > kMaxVertices) throw ResourceError("graph6 graph has " + std::to_string(n) + " vertices");
    const std::size_t pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1 < 0 ? 0 : n - 1) / 2;
    const std::size_t needed = (pairs + 5) / 6;
    if (line.size() - pos != needed) throw InputError("graph6 length mismatch in '" + raw + "'");
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int value = line[pos + bit / 6] - 63;
            if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    return g;
}

std::vector<Graph> read_graph6(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_graph6(line));
    }
    return out;
}

}  // namespace pocfvs
