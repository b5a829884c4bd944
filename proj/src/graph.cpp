#include "pocfvs/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pocfvs/errors.hpp"

namespace pocfvs {

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::from(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex index out of range: " + std::to_string(v));
    bits_ |= Mask{1} << v;
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= kMaxVertices) return;
    bits_ &= ~(Mask{1} << v);
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
}

std::string VertexSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : *this) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    Mask x = a.bits_;
    Mask y = b.bits_;
    while (x && y) {
        int vx = std::countr_zero(x);
        int vy = std::countr_zero(y);
        if (vx != vy) return vx <=> vy;
        x &= x - 1;
        y &= y - 1;
    }
    return (x != 0) <=> (y != 0);
}

Graph::Graph(int vertex_count) {
    if (vertex_count < 0) throw InputError("negative vertex count " + std::to_string(vertex_count));
    if (vertex_count > kMaxVertices) {
        throw ResourceError("graphs are limited to 64 vertices, got " + std::to_string(vertex_count));
    }
    adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edges) : Graph(vertex_count) {
    for (auto [u, v] : edges) add_edge(u, v);
}

Graph::Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges)
    : Graph(vertex_count, std::span<const std::pair<int, int>>(edges.begin(), edges.size())) {}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask row : adj_) twice += std::popcount(row);
    return twice / 2;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count()) {
        throw InputError("vertex " + std::to_string(v) + " not in graph on " +
                         std::to_string(vertex_count()) + " vertices");
    }
}

void Graph::check_set(VertexSet s) const {
    if ((s.bits() & ~all()) != 0) {
        throw InputError("vertex set " + s.to_string() + " not contained in graph on " +
                         std::to_string(vertex_count()) + " vertices");
    }
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= Mask{1} << u;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (neighbors(u) >> v) & 1U;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u) {
        for (int v : VertexSet(neighbors(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    g.check_set(s);
    InducedSubgraph out{Graph(s.size()), s.to_vector()};
    std::vector<int> index(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.original.size(); ++i) index[static_cast<std::size_t>(out.original[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < out.original.size(); ++i) {
        int u = out.original[i];
        for (int v : VertexSet(g.neighbors(u) & s.bits())) {
            if (v > u) out.graph.add_edge(static_cast<int>(i), index[static_cast<std::size_t>(v)]);
        }
    }
    return out;
}

int edge_count_within(const Graph& g, Mask within) {
    int twice = 0;
    for (int v : VertexSet(within)) twice += std::popcount(g.neighbors(v) & within);
    return twice / 2;
}

Mask reach_within(const Graph& g, int start, Mask within) {
    Mask seen = Mask{1} << start;
    Mask frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v);
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components_within(const Graph& g, Mask within) {
    std::vector<VertexSet> out;
    Mask rest = within;
    while (rest) {
        Mask comp = reach_within(g, std::countr_zero(rest), within);
        out.emplace_back(comp);
        rest &= ~comp;
    }
    return out;
}

bool is_connected_within(const Graph& g, Mask within) {
    if (within == 0) return false;
    return reach_within(g, std::countr_zero(within), within) == within;
}

bool is_acyclic_within(const Graph& g, Mask within) {
    int components = static_cast<int>(components_within(g, within).size());
    return edge_count_within(g, within) == std::popcount(within) - components;
}

bool is_acyclic(const Graph& g) { return is_acyclic_within(g, g.all()); }

std::vector<VertexSet> connected_components(const Graph& g) { return components_within(g, g.all()); }

bool is_connected(const Graph& g) { return is_connected_within(g, g.all()); }

namespace {

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
    dist[static_cast<std::size_t>(source)] = 0;
    Mask seen = Mask{1} << source;
    Mask frontier = seen;
    int level = 0;
    while (frontier) {
        ++level;
        Mask next = 0;
        for (int v : VertexSet(frontier)) next |= g.neighbors(v);
        next &= ~seen;
        for (int v : VertexSet(next)) dist[static_cast<std::size_t>(v)] = level;
        seen |= next;
        frontier = next;
    }
    return dist;
}

}  // namespace

DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix d;
    d.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw DomainError("diameter of a disconnected graph is undefined");
    int best = 0;
    for (const auto& row : distance_matrix(g)) best = std::max(best, *std::max_element(row.begin(), row.end()));
    return best;
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
    g.check_vertex(u);
    g.check_vertex(v);
    std::vector<int> dist = bfs_distances(g, u);
    if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
        throw DomainError("no path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    std::vector<int> path{v};
    int cur = v;
    while (cur != u) {
        int want = dist[static_cast<std::size_t>(cur)] - 1;
        for (int w : VertexSet(g.neighbors(cur))) {
            if (dist[static_cast<std::size_t>(w)] == want) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int offset = a.vertex_count();
    Graph out(a.vertex_count() + b.vertex_count());
    for (auto [u, v] : a.edges()) out.add_edge(u, v);
    for (auto [u, v] : b.edges()) out.add_edge(u + offset, v + offset);
    return out;
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::vector<int>> vertices_by_degree(const Graph& g) {
    std::vector<std::vector<int>> out(static_cast<std::size_t>(max_degree(g) + 1));
    for (int v = 0; v < g.vertex_count(); ++v) out[static_cast<std::size_t>(g.degree(v))].push_back(v);
    return out;
}

InducedSubgraph prune_leaves(const Graph& g) {
    Mask keep = g.all();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : VertexSet(keep)) {
            if (std::popcount(g.neighbors(v) & keep) <= 1) {
                keep &= ~(Mask{1} << v);
                changed = true;
            }
        }
    }
    return induced_subgraph(g, VertexSet(keep));
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.vertex_count() << " edges=[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) os << ' ';
        os << u << '-' << v;
        first = false;
    }
    os << ']';
    return os.str();
}

}  // namespace pocfvs
