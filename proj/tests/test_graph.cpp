#include <doctest.h>

#include "oracles.hpp"
#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/graph.hpp"
#include "pocfvs/iso.hpp"
#include "pocfvs/solvers.hpp"

using namespace pocfvs;

TEST_CASE("vertex sets") {
    VertexSet s{3, 1, 5};
    CHECK(s.size() == 3);
    CHECK(s.lowest() == 1);
    CHECK(s.to_vector() == std::vector<int>{1, 3, 5});
    CHECK(s.to_string() == "{1,3,5}");
    s.erase(3);
    s.insert(0);
    CHECK(s == VertexSet{0, 1, 5});
    CHECK((VertexSet{1, 2} | VertexSet{2, 3}) == VertexSet{1, 2, 3});
    CHECK((VertexSet{1, 2} & VertexSet{2, 3}) == VertexSet{2});
    CHECK((VertexSet{1, 2} - VertexSet{2, 3}) == VertexSet{1});
    CHECK(VertexSet{0, 9} < VertexSet{1});  // lexicographic, not by mask value
    CHECK(VertexSet{}.lowest() == -1);
    CHECK_THROWS_AS(s.insert(64), InputError);
}

TEST_CASE("graph construction rejects bad input") {
    Graph g(3);
    CHECK_THROWS_AS(g.add_edge(0, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK_THROWS_AS(Graph(-1), InputError);
    CHECK_THROWS_AS(Graph(65), ResourceError);
    CHECK_THROWS_AS(g.check_set(VertexSet{4}), InputError);
    g.add_edge(0, 1);
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(1, 0));
}

TEST_CASE("induced subgraphs") {
    const Graph c5 = cycle(5);
    CHECK(is_isomorphic(induced_subgraph(c5, VertexSet{0, 1, 2}).graph, path(3)));
    const Graph b = butterfly(5, 9, 4);
    CHECK(is_isomorphic(induced_subgraph(b, b.vertices()).graph, b));
    CHECK(is_isomorphic(induced_subgraph(b, VertexSet{0, 1, 2, 3, 4}).graph, cycle(5)));
    CHECK(induced_subgraph(b, VertexSet{2, 7}).original == std::vector<int>{2, 7});
    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{5}), InputError);
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(path(7)));
    CHECK_FALSE(is_acyclic(cycle(3)));
    const Graph b = butterfly(3, 3, 1);
    const auto hubs = butterfly_hubs(3, 3, 1);
    CHECK(is_acyclic(induced_subgraph(b, b.vertices() - VertexSet{hubs.x, hubs.y}).graph));
    CHECK(is_acyclic(Graph(0)));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path(3)));
    CHECK_FALSE(is_connected(copies(2, path(3))));
    CHECK(is_connected(hourglass_chain(2)));
    CHECK_FALSE(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
    const auto comps = connected_components(disjoint_union(cycle(3), path(2)));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(comps[1] == VertexSet{3, 4});
}

TEST_CASE("distances") {
    CHECK(distance_matrix(path(4))[0][3] == 3);
    CHECK(distance_matrix(cycle(6))[0][3] == 3);
    const auto hubs = butterfly_hubs(3, 3, 2);
    CHECK(distance_matrix(butterfly(3, 3, 2))[static_cast<std::size_t>(hubs.x)][static_cast<std::size_t>(hubs.y)] ==
          2);
    CHECK(diameter(cycle(5)) == 2);
    for (int k = 1; k <= 5; ++k) CHECK(diameter(butterfly(3, 3, k)) == k + 2);
    CHECK(diameter(complete_bipartite(3, 4)) == 2);
    CHECK_THROWS_AS(diameter(copies(2, path(2))), DomainError);
    CHECK(distance_matrix(copies(2, path(1)))[0][1] == kUnreachable);
}

TEST_CASE("shortest paths") {
    CHECK(shortest_path(cycle(6), 0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(shortest_path(path(4), 2, 2) == std::vector<int>{2});
    CHECK_THROWS_AS(shortest_path(copies(2, path(2)), 0, 3), DomainError);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_connected_graph(rng, 9, 0.3);
        const auto d = distance_matrix(g);
        for (int v = 1; v < 9; ++v) {
            const auto p = shortest_path(g, 0, v);
            CHECK(static_cast<int>(p.size()) == d[0][static_cast<std::size_t>(v)] + 1);
            for (std::size_t k = 1; k < p.size(); ++k) CHECK(g.adjacent(p[k - 1], p[k]));
        }
    }
}

TEST_CASE("degrees, unions and leaf pruning") {
    const Graph g = disjoint_union(spider(1, 1, 1), cycle(4));
    CHECK(g.vertex_count() == 8);
    CHECK(max_degree(g) == 3);
    const auto by = vertices_by_degree(g);
    CHECK(by[3] == std::vector<int>{0});
    CHECK(by[1].size() == 3);
    const auto pruned = prune_leaves(tadpole(3, 4));
    CHECK(is_isomorphic(pruned.graph, cycle(4)));
    CHECK(pruned.original == std::vector<int>{0, 1, 2, 3});
    CHECK(prune_leaves(path(5)).graph.vertex_count() == 0);
}

TEST_CASE("property: connectivity and acyclicity agree with the matrix oracle") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n, 0.25);
        CHECK(is_connected(g) == oracle::connected(g));
        CHECK(is_acyclic(g) == oracle::acyclic(g));
    }
}

TEST_CASE("property: distances are symmetric and satisfy the triangle inequality") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const auto d = distance_matrix(g);
        bool ok = true;
        for (std::size_t a = 0; a < d.size(); ++a) {
            ok &= d[a][a] == 0;
            for (std::size_t b = 0; b < d.size(); ++b) {
                ok &= d[a][b] == d[b][a];
                for (std::size_t c = 0; c < d.size(); ++c) {
                    if (d[a][b] != kUnreachable && d[b][c] != kUnreachable) ok &= d[a][c] <= d[a][b] + d[b][c];
                }
            }
        }
        CHECK(ok);
    }
}

TEST_CASE("property: disjoint unions add component counts") {
    std::mt19937 rng(1618);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph a = oracle::random_graph(rng, static_cast<int>(rng() % 8), 0.25);
        const Graph b = oracle::random_graph(rng, static_cast<int>(rng() % 8), 0.25);
        CHECK(connected_components(disjoint_union(a, b)).size() ==
              connected_components(a).size() + connected_components(b).size());
    }
}

TEST_CASE("property: removing S leaves a forest exactly when S is an FVS") {
    std::mt19937 rng(1414);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = oracle::random_graph(rng, n, 0.4);
        const VertexSet s(rng() & g.all());
        const bool forest = is_acyclic(induced_subgraph(g, g.vertices() - s).graph);
        CHECK(forest == is_fvs(g, s));
    }
}
