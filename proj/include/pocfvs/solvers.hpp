#pragma once

#include <cstdint>

#include "pocfvs/graph.hpp"
#include "pocfvs/rational.hpp"

namespace pocfvs {

struct SolveResult {
    int optimum = 0;
    VertexSet witness;
    std::uint64_t explored = 0;  // search nodes or candidate sets examined
};

struct SolverLimits {
    int max_vertices = 20;
};

/// Limits taken from POCFVS_MAX_VERTICES when set, otherwise the defaults.
SolverLimits limits_from_environment();

bool is_fvs(const Graph& g, VertexSet s);
/// FVS inducing a connected subgraph; the empty set counts as connected.
bool is_cfvs(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);
bool is_connected_dominating(const Graph& g, VertexSet s);

/// Minimum feedback vertex set by iterative deepening on the solution size,
/// branching on the vertices of a short cycle of the remaining graph.
SolveResult min_fvs(const Graph& g, SolverLimits limits = {});
/// Minimum connected feedback vertex set; g must be connected. Candidate
/// sets are scanned by increasing size starting from fvs(g).
SolveResult min_cfvs(const Graph& g, SolverLimits limits = {});
SolveResult min_ds(const Graph& g, SolverLimits limits = {});
/// g must be connected. K_1 has cds 1.
SolveResult min_cds(const Graph& g, SolverLimits limits = {});

/// True iff v lies on some cycle of g.
bool on_cycle(const Graph& g, int v);

/// A minimum FVS whose every vertex lies on a cycle and has degree >= 3,
/// found by scanning all minimum FVSs. g must be connected and not a cycle.
/// Throws InternalError if no such set exists.
SolveResult normalize_min_fvs(const Graph& g, SolverLimits limits = {});

/// cfvs(g) / fvs(g); g connected with fvs(g) >= 1.
Rational poc_ratio(const Graph& g, SolverLimits limits = {});
/// cfvs(g) - fvs(g); g connected.
int poc_difference(const Graph& g, SolverLimits limits = {});

}  // namespace pocfvs
