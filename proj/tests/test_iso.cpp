#include <doctest.h>

#include <map>

#include "oracles.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/harness.hpp"
#include "pocfvs/iso.hpp"

using namespace pocfvs;

TEST_CASE("induced embedding examples") {
    const auto e = find_induced_embedding(path(3), cycle(5));
    REQUIRE(e);
    CHECK(is_embedding(path(3), cycle(5), *e));
    CHECK_FALSE(find_induced_embedding(cycle(4), butterfly(3, 3, 2)));
    CHECK(is_induced_subgraph(spider(1, 2, 4), butterfly(8, 3, 9)));
    CHECK_FALSE(is_induced_subgraph(path(3), complete(5)));
    CHECK(is_induced_subgraph(Graph(0), path(2)));
    CHECK_FALSE(is_embedding(path(3), cycle(3), {0, 1, 2}));
}

TEST_CASE("freeness") {
    for (int n = 1; n <= 6; ++n) CHECK(is_free(complete(n), {path(3)}));
    CHECK(is_free(cycle(5), {cycle(3), cycle(4)}));
    CHECK(is_free(hourglass_chain(2), {path(6), disjoint_union(path(4), path(2))}));
    CHECK_FALSE(is_free(cycle(6), {path(5)}));
}

TEST_CASE("linear forests") {
    CHECK(is_linear_forest(disjoint_union(path(5), edgeless(2))));
    CHECK_FALSE(is_linear_forest(spider(1, 1, 1)));
    CHECK_FALSE(is_linear_forest(cycle(3)));
    std::mt19937 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.2);
        CHECK(is_linear_forest(g) == (max_degree(g) <= 2 && oracle::acyclic(g)));
    }
}

TEST_CASE("property: embedding search agrees with subset enumeration") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 400; ++trial) {
        const int hn = 1 + static_cast<int>(rng() % 8);
        const int pn = 1 + static_cast<int>(rng() % std::min(hn, 5));
        const Graph host = oracle::random_graph(rng, hn, 0.45);
        const Graph pattern = oracle::random_graph(rng, pn, 0.45);
        const auto e = find_induced_embedding(pattern, host);
        CHECK(e.has_value() == oracle::contains_induced(pattern, host));
        if (e) CHECK(is_embedding(pattern, host, *e));
    }
}

TEST_CASE("property: mutual induced containment means isomorphic") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph a = oracle::random_graph(rng, n, 0.5);
        const Graph b = rng() % 2 ? oracle::relabel(a, rng) : oracle::random_graph(rng, n, 0.5);
        const bool mutual = is_induced_subgraph(a, b) && is_induced_subgraph(b, a);
        CHECK(mutual == oracle::isomorphic(a, b));
        CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("canonical form separates exactly the isomorphism classes up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::map<std::vector<bool>, CanonicalForm> by_brute;
        std::map<CanonicalForm, std::vector<bool>> by_form;
        bool consistent = true;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((bits >> k) & 1U) g.add_edge(u, v);
            const auto brute = oracle::brute_canonical_code(g);
            const CanonicalForm form = canonical_form(g);
            auto [it1, fresh1] = by_brute.emplace(brute, form);
            auto [it2, fresh2] = by_form.emplace(form, brute);
            consistent &= it1->second == form && it2->second == brute;
        }
        CHECK(consistent);
        CHECK(by_brute.size() == by_form.size());
    }
}

TEST_CASE("property: canonical form is invariant under relabelling at 7-12 vertices") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * (rng() % 100) / 100.0);
        const Graph h = oracle::relabel(g, rng);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(canonical_graph(g) == canonical_graph(h));
        CHECK(is_isomorphic(canonical_graph(g), g));
    }
    // Regular graphs defeat colour refinement alone.
    const Graph a = cycle(8);
    const Graph b = copies(2, cycle(4));
    CHECK_FALSE(canonical_form(a) == canonical_form(b));
    const Graph c6 = copies(2, cycle(3));
    CHECK_FALSE(canonical_form(cycle(6)) == canonical_form(c6));
    CHECK(canonical_form(complete_bipartite(3, 3)) == canonical_form(oracle::relabel(complete_bipartite(3, 3), rng)));
}
