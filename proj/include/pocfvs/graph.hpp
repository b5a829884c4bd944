#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pocfvs {

/// Graphs are stored as one 64-bit adjacency row per vertex.
inline constexpr int kMaxVertices = 64;

using Mask = std::uint64_t;

inline constexpr Mask low_bits(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

/// A set of vertex indices of one graph, stored as a bitmask.
class VertexSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        iterator() = default;
        explicit iterator(Mask rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    VertexSet() = default;
    explicit constexpr VertexSet(Mask bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> members);
    static VertexSet from(std::span<const int> members);

    Mask bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return v >= 0 && v < 64 && ((bits_ >> v) & 1U); }
    void insert(int v);
    void erase(int v);
    /// Smallest member; -1 when empty.
    int lowest() const { return bits_ ? std::countr_zero(bits_) : -1; }
    bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
    std::vector<int> to_vector() const;
    std::string to_string() const;

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    friend bool operator==(VertexSet, VertexSet) = default;
    /// Orders by the sorted member list (lexicographic), not by the raw mask.
    friend std::strong_ordering operator<=>(VertexSet a, VertexSet b);

private:
    Mask bits_ = 0;
};

/// Undirected simple graph on the dense vertex range 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    Graph(int vertex_count, std::span<const std::pair<int, int>> edges);
    Graph(int vertex_count, std::initializer_list<std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    /// Bitmask of all vertices.
    Mask all() const { return low_bits(vertex_count()); }
    VertexSet vertices() const { return VertexSet(all()); }

    void add_edge(int u, int v);
    bool adjacent(int u, int v) const;
    Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet neighborhood(int v) const { return VertexSet(neighbors(v)); }
    VertexSet closed_neighborhood(int v) const {
        return VertexSet(neighbors(v) | (Mask{1} << v));
    }
    int degree(int v) const { return std::popcount(neighbors(v)); }
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    void check_vertex(int v) const;
    void check_set(VertexSet s) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Mask> adj_;
};

/// Result of taking an induced subgraph: the new graph plus, for each new
/// vertex, its index in the parent graph.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> original;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Number of edges of g with both ends in `within`.
int edge_count_within(const Graph& g, Mask within);
/// Vertex sets of the connected components of g[within], ordered by smallest vertex.
std::vector<VertexSet> components_within(const Graph& g, Mask within);
/// Vertices of g[within] reachable from `start` (start must be in within).
Mask reach_within(const Graph& g, int start, Mask within);
bool is_connected_within(const Graph& g, Mask within);
bool is_acyclic_within(const Graph& g, Mask within);

bool is_acyclic(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);
/// The empty graph is not connected; K1 is.
bool is_connected(const Graph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

using DistanceMatrix = std::vector<std::vector<int>>;
DistanceMatrix distance_matrix(const Graph& g);
int diameter(const Graph& g);
/// Shortest u-v path (both ends included). Among shortest paths, each vertex's
/// predecessor is the smallest-index vertex one step closer to u.
std::vector<int> shortest_path(const Graph& g, int u, int v);

Graph disjoint_union(const Graph& a, const Graph& b);

int max_degree(const Graph& g);
/// Vertices grouped by degree: result[d] lists the vertices of degree d.
std::vector<std::vector<int>> vertices_by_degree(const Graph& g);

/// Iteratively removes vertices of degree at most one. Preserves fvs and cfvs
/// on connected graphs that are not trees.
InducedSubgraph prune_leaves(const Graph& g);

std::string to_string(const Graph& g);

}  // namespace pocfvs
