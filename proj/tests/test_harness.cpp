#include <doctest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/harness.hpp"

using namespace pocfvs;

namespace {
std::size_t count_exact(int n, std::vector<Graph> forbidden = {}) {
    EnumerationSpec spec;
    spec.min_vertices = n;
    spec.max_vertices = n;
    spec.forbidden = std::move(forbidden);
    return enumerate_connected(spec).size();
}
}  // namespace

TEST_CASE("enumeration counts") {
    CHECK(count_exact(3) == 2);
    CHECK(count_exact(4) == 6);
    CHECK(count_exact(5) == 21);
    CHECK(enumerate_connected(3).size() == 4);  // K1, K2, P3, C3
    const auto cliques = enumerate_connected(5, {path(3)});
    REQUIRE(cliques.size() == 5);
    for (std::size_t k = 0; k < cliques.size(); ++k) CHECK(is_isomorphic(cliques[k], complete(static_cast<int>(k) + 1)));
    CHECK_THROWS_AS(enumerate_connected(10), ResourceError);
    CHECK(enumerate_connected(0).empty());
}

TEST_CASE("enumeration counts agree with orbit counting") {
    for (int n = 3; n <= 7; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long long>(count_exact(n)) == oracle::connected_class_count(n));
    }
}

TEST_CASE("enumeration emits one connected representative per class up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::vector<bool>> naive;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
            Graph g(n);
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if ((bits >> k) & 1U) g.add_edge(u, v);
            if (oracle::connected(g)) naive.insert(oracle::brute_canonical_code(g));
        }
        std::set<std::vector<bool>> produced;
        EnumerationSpec spec;
        spec.min_vertices = n;
        spec.max_vertices = n;
        const auto graphs = enumerate_connected(spec);
        for (const Graph& g : graphs) produced.insert(oracle::brute_canonical_code(g));
        CHECK(produced.size() == graphs.size());
        CHECK(produced == naive);
    }
}

TEST_CASE("enumeration respects forbidden subgraphs") {
    for (const Graph& g : enumerate_connected(7, {path(4)})) CHECK_FALSE(is_induced_subgraph(path(4), g));
}

TEST_CASE("experiments") {
    const auto all6 = max_poc(EnumerationSpec{1, 6, true, {}});
    CHECK(all6.records.size() == 1 + 1 + 2 + 6 + 21 + 112);
    CHECK(all6.max_difference >= 1);
    bool k33_found = false;
    for (const auto& r : all6.records) {
        if (is_isomorphic(r.graph, complete_bipartite(3, 3))) {
            k33_found = true;
            CHECK(r.difference == 1);
        }
        CHECK(r.cfvs >= r.fvs);
        if (is_acyclic(r.graph) || max_degree(r.graph) == 2 || r.graph.edge_count() == r.graph.vertex_count() * (r.graph.vertex_count() - 1) / 2)
            CHECK(r.cfvs == r.fvs);
    }
    CHECK(k33_found);
    int forests = 0;
    for (const auto& r : all6.records) forests += r.fvs == 0 ? 1 : 0;
    CHECK(all6.forest_count == forests);

    const auto p4free = max_poc(EnumerationSpec{1, 7, true, {path(4)}});
    REQUIRE(p4free.max_ratio);
    CHECK(*p4free.max_ratio <= Rational(2));

    const auto cliques = max_poc(EnumerationSpec{1, 8, true, {path(3)}});
    CHECK(cliques.records.size() == 8);
    CHECK(*cliques.max_ratio == Rational(1));
    CHECK(cliques.max_difference == 0);

    const auto j = nlohmann::json::parse(all6.to_json(false));
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(nlohmann::json::parse(all6.to_json(true)).contains("timestamp"));
    CHECK(all6.to_json(false) == max_poc(EnumerationSpec{1, 6, true, {}}, {}, 1).to_json(false));
    CHECK(j["records"].size() == all6.records.size());
}

TEST_CASE("tetrachotomy") {
    auto cls = [](const char* s) { return *tetrachotomy_classify(parse_graph_spec(s)).tetrachotomy_class; };
    CHECK(cls("P3") == 1);
    CHECK(cls("2P1") == 1);
    CHECK(cls("P2+P1") == 2);
    CHECK(cls("2P3") == 2);
    CHECK(cls("P5") == 2);
    CHECK(cls("P6") == 3);
    CHECK(cls("P4+P2") == 3);
    CHECK(cls("C3") == 4);
    CHECK(cls("claw") == 4);
    CHECK(tetrachotomy_classify(cycle(3)).verdict == Verdict::unbounded);
}

TEST_CASE("unboundedness witnesses") {
    const auto c3 = unboundedness_witnesses(cycle(3), 4);
    REQUIRE(c3.size() == 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(is_isomorphic(c3[static_cast<std::size_t>(k - 1)].graph, butterfly(4, 4, k)));
        CHECK(c3[static_cast<std::size_t>(k - 1)].cfvs - c3[static_cast<std::size_t>(k - 1)].fvs == k - 1);
    }
    const auto p6 = unboundedness_witnesses(path(6), 2);
    REQUIRE(p6.size() == 2);
    CHECK(p6[0].cfvs - p6[0].fvs == 1);
    CHECK(p6[1].cfvs - p6[1].fvs == 2);
    CHECK(unboundedness_witnesses(path(3), 3).empty());
    for (const auto& w : unboundedness_witnesses(path(5), 5)) CHECK_FALSE(is_induced_subgraph(path(5), w.graph));
}

TEST_CASE("doubled-triangle experiment") {
    const auto r = gprime_experiment(3);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.fvs_constant_two);
    CHECK(r.cfvs_strictly_increasing);
    CHECK(r.all_butterfly_free);
    CHECK(r.rows[0].patterns_checked > 0);
    CHECK_THROWS_AS(gprime_experiment(0), InputError);
}

TEST_CASE("graph6 round trip") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(path(2)) == "A_");
    CHECK(to_graph6(complete(4)) == "C~");
    CHECK(from_graph6("Bw") == complete(3));
    std::mt19937 rng(66);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 64) + 1, 0.3);
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    std::istringstream in(">>graph6<<Bw\n\nC~\r\n");
    const auto gs = read_graph6(in);
    REQUIRE(gs.size() == 2);
    CHECK(gs[1] == complete(4));
    CHECK_THROWS_AS(from_graph6("C~~"), InputError);
    CHECK_THROWS_AS(from_graph6(""), InputError);
    CHECK_THROWS_AS(from_graph6("C\x01"), InputError);
}

TEST_CASE("verify batteries") {
    CHECK(run_verify("lemmas").all_passed());
    CHECK_THROWS_AS(run_verify("nothing"), InputError);
}
