#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pocfvs/graph.hpp"

namespace pocfvs {

/// Injective map pattern vertex -> host vertex preserving both adjacency and
/// non-adjacency.
using Embedding = std::vector<int>;

/// Complete backtracking search for an induced copy of `pattern` in `host`.
/// Pattern vertices are matched in a fixed connectivity-first order and host
/// candidates are tried in increasing index order, so the returned embedding
/// is deterministic.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host);

bool is_induced_subgraph(const Graph& pattern, const Graph& host);
bool is_embedding(const Graph& pattern, const Graph& host, const Embedding& map);

/// True iff no member of `family` is an induced subgraph of g.
bool is_free(const Graph& g, const std::vector<Graph>& family);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Canonical labeling. `order[k]` is the vertex placed at canonical position
/// k; `code` is the upper triangle of the relabelled adjacency matrix. Two
/// graphs have equal (vertex_count, code) iff they are isomorphic.
struct CanonicalForm {
    int vertex_count = 0;
    std::vector<std::uint64_t> code;
    std::vector<int> order;

    bool operator==(const CanonicalForm& o) const {
        return vertex_count == o.vertex_count && code == o.code;
    }
    bool operator<(const CanonicalForm& o) const {
        if (vertex_count != o.vertex_count) return vertex_count < o.vertex_count;
        return code < o.code;
    }
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const;
};

/// Individualization-refinement search over equitable colourings; twin
/// vertices within a cell are explored once.
CanonicalForm canonical_form(const Graph& g);
/// The graph relabelled into canonical order.
Graph canonical_graph(const Graph& g);

/// Every component is a path.
bool is_linear_forest(const Graph& g);

}  // namespace pocfvs
