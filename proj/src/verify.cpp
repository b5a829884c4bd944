#include <sstream>

#include "pocfvs/constructive.hpp"
#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/harness.hpp"

namespace pocfvs {

bool VerifyReport::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    int passed = 0;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << '\n';
        passed += c.passed ? 1 : 0;
    }
    os << passed << '/' << checks.size() << " checks passed\n";
    return os.str();
}

namespace {

// The body returns an empty string on success, a failure description otherwise.
template <class Body>
CheckResult run_check(std::string name, Body body) {
    CheckResult r{std::move(name), false, {}};
    try {
        r.detail = body();
        r.passed = r.detail.empty();
    } catch (const std::exception& e) {
        r.detail = std::string("exception: ") + e.what();
    }
    return r;
}

const std::vector<std::string> kProfileCatalog{
    "P4",          "P2+P3",         "C3",           "C4",        "C5+P2",     "tadpole:1,3", "claw",
    "spider:1,2,4", "P2+tadpole:3,5", "2C3",        "C3+C4",     "2claw",     "tadpole:0,3+claw",
    "claw+spider:1,2,2", "tadpole:2,4+spider:2,2,1", "hourglass", "C3+P2",
};

void lemma_checks(VerifyReport& report) {
    report.checks.push_back(run_check("symbolic covered pairs equal brute force on 3..9", [] {
        std::ostringstream bad;
        for (const auto& spec : kProfileCatalog) {
            const Graph h = parse_graph_spec(spec);
            const PairSet set = covered_pairs(h);
            for (int i = 3; i <= 9; ++i)
                for (int j = 3; j <= 9; ++j)
                    if (set.contains(i, j) != covers_bruteforce(h, i, j))
                        bad << spec << " at (" << i << "," << j << ") ";
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("tetrachotomy catalog", [] {
        const std::vector<std::pair<std::string, int>> catalog{
            {"P1", 1}, {"P2", 1},   {"P3", 1},      {"P4", 2},    {"P5", 2},    {"P5+2P1", 2}, {"2P3", 2},
            {"3P3", 2}, {"P6", 3},  {"P4+P2", 3},   {"P7", 3},    {"C3", 4},    {"claw", 4},   {"hourglass", 4},
            {"C3+P2", 4}};
        std::ostringstream bad;
        for (const auto& [spec, cls] : catalog) {
            const int got = *tetrachotomy_classify(parse_graph_spec(spec)).tetrachotomy_class;
            if (got != cls) bad << spec << " -> " << got << " (expected " << cls << ") ";
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("pair classifier agrees with the family decision", [] {
        const std::vector<std::pair<std::string, std::string>> pairs{
            {"P4", "C3"},  {"C3", "tadpole:1,3"}, {"C4", "claw"}, {"tadpole:1,3", "2claw"},
            {"2C3", "claw"}, {"C3", "C4"},        {"claw", "C3+P2"}};
        std::ostringstream bad;
        for (const auto& [a, b] : pairs) {
            const auto r = classify_pair(parse_graph_spec(a), parse_graph_spec(b));
            const auto f = family_covers_all({parse_graph_spec(a), parse_graph_spec(b)});
            if (r.verdict != f.verdict) bad << a << "," << b << ' ';
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("connected graph counts for 3..6 vertices", [] {
        const int expected[] = {2, 6, 21, 112};
        std::ostringstream bad;
        for (int n = 3; n <= 6; ++n) {
            EnumerationSpec spec;
            spec.min_vertices = n;
            spec.max_vertices = n;
            const auto got = enumerate_connected(spec).size();
            if (got != static_cast<std::size_t>(expected[n - 3])) bad << "n=" << n << " got " << got << ' ';
        }
        return bad.str();
    }));
}

void witness_checks(VerifyReport& report) {
    report.checks.push_back(run_check("butterfly fvs 2 and cfvs k+1", [] {
        std::ostringstream bad;
        for (int i = 3; i <= 5; ++i)
            for (int j = i; j <= 5; ++j)
                for (int k = 1; k <= 4; ++k) {
                    const Graph b = butterfly(i, j, k);
                    const int f = min_fvs(b).optimum;
                    const int c = min_cfvs(b).optimum;
                    if (f != 2 || c != k + 1) bad << "B" << i << "," << j << "," << k << ' ';
                }
        return bad.str();
    }));
    report.checks.push_back(run_check("hourglass chains: fvs k+1, cfvs 2k+1, (P6, P4+P2)-free", [] {
        std::ostringstream bad;
        const std::vector<Graph> family{path(6), disjoint_union(path(4), path(2))};
        for (int k = 1; k <= 3; ++k) {
            const Graph g = hourglass_chain(k);
            if (min_fvs(g).optimum != k + 1 || min_cfvs(g).optimum != 2 * k + 1 || !is_free(g, family))
                bad << "L" << k << ' ';
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("K3,l and the 3P1 graph: fvs 2, cfvs 3", [] {
        std::ostringstream bad;
        for (int l = 3; l <= 6; ++l) {
            const Graph g = complete_bipartite(3, l);
            if (min_fvs(g).optimum != 2 || min_cfvs(g).optimum != 3) bad << "K3," << l << ' ';
        }
        const Graph w = three_p1_witness();
        if (min_fvs(w).optimum != 2 || min_cfvs(w).optimum != 3) bad << "threeP1";
        return bad.str();
    }));
    report.checks.push_back(run_check("doubled-triangle subdivisions t = 1..2", [] {
        const GPrimeReport r = gprime_experiment(2, 12);
        if (r.fvs_constant_two && r.cfvs_strictly_increasing && r.all_butterfly_free) return std::string();
        return r.to_text();
    }));
}

void constructive_checks(VerifyReport& report) {
    report.checks.push_back(run_check("shortest-path joining on P4-free graphs n <= 6", [] {
        std::ostringstream bad;
        for (const Graph& g : enumerate_connected(6, {path(4)})) {
            const SolveResult f = min_fvs(g);
            const auto r = connectify_by_paths(g, f.witness);
            if (r.set.size() > 4 * 9 * f.optimum) bad << to_graph6(g) << ' ';
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("P5-free graphs n <= 6 within fvs + 3", [] {
        std::ostringstream bad;
        for (const Graph& g : enumerate_connected(6, {path(5)})) {
            const auto r = connectify_p5sp1(g, 0);
            if (r.set.size() > min_fvs(g).optimum + 3) bad << to_graph6(g) << ' ';
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("2P3-free graphs n <= 6 within fvs + 42", [] {
        std::ostringstream bad;
        for (const Graph& g : enumerate_connected(6, {copies(2, path(3))})) {
            const auto r = connectify_sp3(g, 2);
            if (r.set.size() > min_fvs(g).optimum + 42) bad << to_graph6(g) << ' ';
        }
        return bad.str();
    }));
    report.checks.push_back(run_check("cds <= 3 ds - 2 on connected graphs n <= 6", [] {
        std::ostringstream bad;
        for (const Graph& g : enumerate_connected(6)) {
            if (min_cds(g).optimum > 3 * min_ds(g).optimum - 2) bad << to_graph6(g) << ' ';
        }
        return bad.str();
    }));
}

}  // namespace

VerifyReport run_verify(const std::string& suite) {
    if (suite != "lemmas" && suite != "witnesses" && suite != "constructive" && suite != "all") {
        throw InputError("unknown verify suite '" + suite + "'");
    }
    VerifyReport report;
    if (suite == "lemmas" || suite == "all") lemma_checks(report);
    if (suite == "witnesses" || suite == "all") witness_checks(report);
    if (suite == "constructive" || suite == "all") constructive_checks(report);
    return report;
}

}  // namespace pocfvs
