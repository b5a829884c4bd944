#include <doctest.h>

#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/iso.hpp"
#include "pocfvs/solvers.hpp"

using namespace pocfvs;

TEST_CASE("basic families") {
    CHECK(path(5).edge_count() == 4);
    CHECK(cycle(6).edge_count() == 6);
    CHECK(complete(5).edge_count() == 10);
    CHECK(edgeless(4).edge_count() == 0);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
    CHECK(hourglass().vertex_count() == 5);
    CHECK(hourglass().degree(0) == 4);
    CHECK_THROWS_AS(cycle(2), InputError);
    CHECK_THROWS_AS(path(-1), InputError);
}

TEST_CASE("butterflies") {
    const Graph b = butterfly(5, 9, 4);
    CHECK(b.vertex_count() == 17);
    CHECK(b.edge_count() == 5 + 9 + 4);
    const auto hubs = butterfly_hubs(5, 9, 4);
    CHECK(b.degree(hubs.x) == 3);
    CHECK(b.degree(hubs.y) == 3);
    CHECK(shortest_path(b, hubs.x, hubs.y).size() == 5);
    CHECK_THROWS_AS(butterfly(2, 3, 1), InputError);
    CHECK_THROWS_AS(butterfly(3, 3, 0), InputError);
    for (int i = 3; i <= 5; ++i)
        for (int j = 3; j <= 5; ++j)
            for (int k = 1; k <= 3; ++k) CHECK(min_fvs(butterfly(i, j, k)).optimum == 2);
    CHECK(min_cfvs(butterfly(3, 3, 3)).optimum == 4);
}

TEST_CASE("spiders and tadpoles") {
    const Graph t = spider(2, 3, 1);
    CHECK(t.vertex_count() == 7);
    CHECK(t.degree(0) == 3);
    CHECK(is_acyclic(t));
    CHECK(is_isomorphic(spider(1, 1, 1), complete_bipartite(1, 3)));
    CHECK(is_isomorphic(tadpole(0, 5), cycle(5)));
    const Graph d = tadpole(3, 4);
    CHECK(d.vertex_count() == 7);
    CHECK(d.degree(0) == 3);
    CHECK_THROWS_AS(spider(0, 1, 1), InputError);
    CHECK_THROWS_AS(tadpole(1, 2), InputError);
}

TEST_CASE("hourglass chains") {
    for (int k = 1; k <= 4; ++k) {
        const Graph g = hourglass_chain(k);
        CHECK(g.vertex_count() == 5 * k + 1);
        CHECK(g.degree(0) == 4 * k);
        CHECK(g.degree(hourglass_center(k - 1)) == 4);
        SolverLimits lim{32};
        CHECK(min_fvs(g, lim).optimum == k + 1);
        if (k <= 3) CHECK(min_cfvs(g, lim).optimum == 2 * k + 1);
    }
    CHECK(is_free(hourglass_chain(3), {path(6), disjoint_union(path(4), path(2))}));
    CHECK_THROWS_AS(hourglass_chain(0), InputError);
}

TEST_CASE("single-step witnesses") {
    const Graph w = three_p1_witness();
    CHECK(w.vertex_count() == 6);
    CHECK(w.edge_count() == 11);
    CHECK(is_connected(w));
    CHECK_FALSE(is_induced_subgraph(edgeless(3), w));
}

TEST_CASE("doubled-triangle subdivisions") {
    CHECK(gprime_uniform(1).vertex_count() == 9);
    CHECK(gprime_uniform(3).vertex_count() == 21);
    const Graph g = gprime({1, 2, 1, 1, 3, 1});
    CHECK(g.vertex_count() == 3 + 9);
    CHECK(g.degree(0) == 4);
    CHECK_THROWS_AS(gprime({0, 1, 1, 1, 1, 1}), InputError);
}

TEST_CASE("copies") {
    CHECK(copies(3, path(3)).vertex_count() == 9);
    CHECK(copies(0, path(3)).vertex_count() == 0);
    CHECK(connected_components(copies(3, path(3))).size() == 3);
}

TEST_CASE("spec language") {
    CHECK(is_isomorphic(parse_graph_spec("butterfly:5,9,4"), butterfly(5, 9, 4)));
    CHECK(is_isomorphic(parse_graph_spec("P4+P2"), disjoint_union(path(4), path(2))));
    CHECK(is_isomorphic(parse_graph_spec("2P3"), copies(2, path(3))));
    CHECK(is_isomorphic(parse_graph_spec("3*C4"), copies(3, cycle(4))));
    CHECK(is_isomorphic(parse_graph_spec("P5+2P1"), disjoint_union(path(5), edgeless(2))));
    CHECK(is_isomorphic(parse_graph_spec("Lk:3"), hourglass_chain(3)));
    CHECK(is_isomorphic(parse_graph_spec("L2"), hourglass_chain(2)));
    CHECK(is_isomorphic(parse_graph_spec("K3,4"), complete_bipartite(3, 4)));
    CHECK(is_isomorphic(parse_graph_spec("K4"), complete(4)));
    CHECK(is_isomorphic(parse_graph_spec("claw"), spider(1, 1, 1)));
    CHECK(is_isomorphic(parse_graph_spec("threeP1"), three_p1_witness()));
    CHECK(is_isomorphic(parse_graph_spec("gprime:2"), gprime_uniform(2)));
    CHECK(is_isomorphic(parse_graph_spec("p5witness:2"), disjoint_union(path(5), edgeless(2))));
    CHECK(is_isomorphic(parse_graph_spec("tadpole:2,3+spider:1,2,2"), disjoint_union(tadpole(2, 3), spider(1, 2, 2))));
    CHECK_THROWS_AS(parse_graph_spec(""), InputError);
    CHECK_THROWS_AS(parse_graph_spec("butterfly:3,3"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("nosuch:1"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("P4+"), InputError);
    CHECK(split_spec_list("butterfly:3,3,1,P4") == std::vector<std::string>{"butterfly:3,3,1", "P4"});
    CHECK(split_spec_list("K3,4,C3") == std::vector<std::string>{"K3,4", "C3"});
    CHECK(split_spec_list("tadpole:0,3+claw,2P3") == std::vector<std::string>{"tadpole:0,3+claw", "2P3"});
    CHECK(split_spec_list("C3, 2*C4") == std::vector<std::string>{"C3", "2*C4"});
    CHECK_THROWS_AS(split_spec_list("C3,,C4"), InputError);
    const FamilySpec spec = parse_family_spec("butterfly:3,4,2");
    CHECK(spec.family == Family::butterfly);
    CHECK(spec.params == std::vector<int>{3, 4, 2});
    CHECK(is_isomorphic(parse_graph_spec(to_string(spec)), butterfly(3, 4, 2)));
}

TEST_CASE("butterfly sizes") {
    for (int i = 3; i <= 8; ++i)
        for (int j = 3; j <= 8; ++j)
            for (int k = 1; k <= 6; ++k) {
                const Graph b = butterfly(i, j, k);
                CHECK(b.vertex_count() == i + j + k - 1);
                CHECK(b.edge_count() == i + j + k);
            }
}

TEST_CASE("spiders and tadpoles inside butterflies and longer hosts") {
    for (int k = 1; k <= 3; ++k)
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; q <= 3; ++q) CHECK(is_induced_subgraph(spider(k, p, q), butterfly(p + q + 2, 3, k + 1)));
    for (int l = 0; l <= 6; ++l) CHECK(is_induced_subgraph(tadpole(l, 3), tadpole(l + 1, 3)));
    for (int k = 0; k <= 3; ++k)
        for (int r = 3; r <= 6; ++r) CHECK(min_fvs(tadpole(k, r)).optimum == 1);
    // Graphs on at most k vertices inside B_{i,j,k+1} already sit inside B_{i,j,k}.
    for (const char* spec : {"P3", "claw", "C3+P1", "P2+P2"}) {
        const Graph h = parse_graph_spec(spec);
        const int k = h.vertex_count();
        for (int i = 3; i <= 5; ++i)
            CHECK(is_induced_subgraph(h, butterfly(i, 4, k)) == is_induced_subgraph(h, butterfly(i, 4, k + 1)));
    }
}
