#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pocfvs/graph.hpp"
#include "pocfvs/solvers.hpp"

namespace pocfvs {

struct TraceStep {
    std::string name;
    std::vector<std::pair<std::string, VertexSet>> sets;
    /// Working set after the step. Every recorded working set must be an FVS.
    std::optional<VertexSet> current;
    std::string note;
};

struct SwapRecord {
    int removed = -1;
    int added = -1;
    bool closed_neighborhood_contained = false;  // N[removed] within N[added]
};

/// Audit log of one connectification run.
struct ProcedureTrace {
    std::string method;
    int s_param = 0;
    int fvs = 0;
    std::vector<TraceStep> steps;
    std::vector<SwapRecord> swaps;
    VertexSet result;
    int claimed_bound = 0;
    std::string bound_expression;

    int actual_size() const { return result.size(); }
    TraceStep& add_step(std::string name, std::optional<VertexSet> current = std::nullopt, std::string note = {});
    /// Appends another trace's steps and swaps, prefixing step names.
    void absorb(const ProcedureTrace& inner, const std::string& prefix);

    std::string to_json() const;
    std::string to_text() const;
};

struct ConnectifyResult {
    VertexSet set;
    ProcedureTrace trace;
};

/// Throws InternalError (with the trace attached) unless every working set
/// is an FVS of g, every swap satisfied N[x] within N[y], the result is a
/// connected FVS and its size is within the claimed bound.
void verify_trace(const Graph& g, const ProcedureTrace& trace);

/// Joins a feedback vertex set `s` of connected g by adding, for each member
/// y other than the smallest member x, the interior of the shortest x-y path.
/// Bound: |s| + (|s| - 1)(diameter(g) - 1).
ConnectifyResult connectify_by_paths(const Graph& g, VertexSet s);

/// Connected FVS of a connected (P_5 + s P_1)-free graph: a minimum FVS plus a
/// dominating set that is a clique or induces P_3 (P_5-free case, bound
/// fvs + 3), or plus a minimum connected dominating set (bound fvs + 3s + 10).
ConnectifyResult connectify_p5sp1(const Graph& g, int s_param, SolverLimits limits = {});

/// Grows S (by at most 2s - 2 vertices of u, all joining the component
/// `component` of g[S]) until every remaining u-vertex touches at most one
/// other component and every other component touches at most one remaining
/// u-vertex. `component` indexes components_within(g, S). Preconditions: g
/// connected and s P_3-free, the component holds an induced (s-1) P_3, u is
/// independent and disjoint from S.
ConnectifyResult move_step(const Graph& g, VertexSet S, int component, VertexSet u, int s_param);

/// Connected FVS of a connected s P_3-free graph within fvs + 12s^2 - 2s - 2
/// (fvs + 0 when s = 1).
ConnectifyResult connectify_sp3(const Graph& g, int s_param, SolverLimits limits = {});

/// 12 s^2 - 2 s - 2 for s >= 2 and 0 for s = 1.
int sp3_constant(int s_param);

}  // namespace pocfvs
