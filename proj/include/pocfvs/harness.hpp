#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pocfvs/cover.hpp"
#include "pocfvs/graph.hpp"
#include "pocfvs/iso.hpp"
#include "pocfvs/rational.hpp"
#include "pocfvs/solvers.hpp"

namespace pocfvs {

inline constexpr int kMaxEnumerationVertices = 9;

struct EnumerationSpec {
    int min_vertices = 1;
    int max_vertices = 0;
    bool connected = true;  // only connected generation is supported
    std::vector<Graph> forbidden;
};

/// One representative per isomorphism class of connected forbidden-free
/// graphs with min_vertices..max_vertices vertices, ordered by vertex count
/// and then by canonical code. Graphs are grown one vertex at a time, which
/// reaches every connected graph because removing a non-cut vertex keeps a
/// connected induced subgraph, and forbidden-freeness is hereditary.
std::vector<Graph> enumerate_connected(const EnumerationSpec& spec);
std::vector<Graph> enumerate_connected(int n_max, const std::vector<Graph>& forbidden = {});
/// Streaming form; the callback sees graphs in the same order.
void for_each_connected(const EnumerationSpec& spec, const std::function<void(const Graph&)>& visit);

struct GraphRecord {
    Graph graph;
    CanonicalForm canonical;
    int fvs = 0;
    int cfvs = 0;
    std::optional<Rational> ratio;  // unset for forests
    int difference = 0;
};

struct ExperimentReport {
    std::string description;
    std::vector<GraphRecord> records;
    std::optional<Rational> max_ratio;
    int max_difference = 0;
    int argmax_ratio = -1;       // record index
    int argmax_difference = -1;  // record index
    int forest_count = 0;        // records with fvs = 0, excluded from the ratio

    /// Recomputes the aggregates from `records`.
    void fold();
    std::string to_json(bool include_timestamp = false) const;
    std::string to_text() const;
};

/// Solves fvs and cfvs for every graph in `graphs`; per-graph work runs on
/// `threads` workers but records keep the input order.
ExperimentReport evaluate_graphs(const std::vector<Graph>& graphs, SolverLimits limits = {}, int threads = 0);
ExperimentReport max_poc(const EnumerationSpec& spec, SolverLimits limits = {}, int threads = 0);

/// Four-way classification of a single forbidden graph: 1 (ratio 1), 2
/// (bounded additive gap), 3 (bounded ratio), 4 (unbounded ratio).
ClassificationResult tetrachotomy_classify(const Graph& h);

struct Witness {
    std::string label;
    Graph graph;
    int fvs = 0;
    int cfvs = 0;
};

/// Graphs avoiding h on which the gap between cfvs and fvs grows: butterflies
/// at the first pair h does not cover (class 4), the hourglass chain L_k
/// (class 3). Class 2 yields the single-step witnesses K_{3,l} or the 3P_1
/// graph when they avoid h; class 1 yields nothing.
std::vector<Witness> unboundedness_witnesses(const Graph& h, int count, SolverLimits limits = {});

struct GPrimeRow {
    int t = 0;
    int vertex_count = 0;
    int fvs = 0;
    int cfvs = 0;
    int patterns_checked = 0;
    bool butterfly_free = false;
};

struct GPrimeReport {
    std::vector<GPrimeRow> rows;
    bool fvs_constant_two = false;
    bool cfvs_strictly_increasing = false;
    bool all_butterfly_free = false;
    std::string to_json() const;
    std::string to_text() const;
};

/// Doubled-triangle subdivisions with every edge split t times, t = 1..t_max;
/// butterfly-freeness is tested against every B_{i,j,k} with at most
/// `max_pattern_vertices` vertices.
GPrimeReport gprime_experiment(int t_max, int max_pattern_vertices = 12, SolverLimits limits = {});

// graph6 ----------------------------------------------------------------

std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);
/// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
std::vector<Graph> read_graph6(std::istream& in);

// Cross-validation batteries --------------------------------------------

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
    std::string to_text() const;
};

/// suite: "lemmas", "witnesses", "constructive" or "all".
VerifyReport run_verify(const std::string& suite);

}  // namespace pocfvs
