#pragma once
// Brute-force reference implementations. They read a graph only through
// vertex_count() and edges(), keep their own adjacency matrix, and share no
// code with the library's algorithms.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "pocfvs/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const pocfvs::Graph& g) {
    const int n = g.vertex_count();
    Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [a, b] : g.edges()) {
        m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        m[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
    }
    return m;
}

inline bool adj(const Matrix& m, int a, int b) { return m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

// Number of components of the subgraph induced by `keep` (a vertex list).
inline int component_count(const Matrix& m, const std::vector<int>& keep) {
    std::vector<int> label(m.size(), -1);
    int comps = 0;
    for (int s : keep) {
        if (label[static_cast<std::size_t>(s)] >= 0) continue;
        ++comps;
        std::vector<int> stack{s};
        label[static_cast<std::size_t>(s)] = comps;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : keep) {
                if (label[static_cast<std::size_t>(w)] < 0 && adj(m, v, w)) {
                    label[static_cast<std::size_t>(w)] = comps;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

inline int edges_within(const Matrix& m, const std::vector<int>& keep) {
    int e = 0;
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b) e += adj(m, keep[a], keep[b]) ? 1 : 0;
    return e;
}

inline std::vector<int> members(std::uint64_t mask, int n) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1U) out.push_back(v);
    return out;
}

inline bool is_forest(const Matrix& m, const std::vector<int>& keep) {
    return edges_within(m, keep) == static_cast<int>(keep.size()) - component_count(m, keep);
}

inline bool connected(const pocfvs::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return component_count(matrix(g), all) == 1;
}

inline bool acyclic(const pocfvs::Graph& g) {
    std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
    std::iota(all.begin(), all.end(), 0);
    return is_forest(matrix(g), all);
}

enum class Problem { fvs, cfvs, ds, cds };

inline bool satisfies(const Matrix& m, int n, std::uint64_t set, Problem p) {
    const std::vector<int> in = members(set, n);
    if (p == Problem::fvs || p == Problem::cfvs) {
        if (!is_forest(m, members(~set & ((std::uint64_t{1} << n) - 1), n))) return false;
        return p == Problem::fvs || in.size() <= 1 || component_count(m, in) == 1;
    }
    for (int v = 0; v < n; ++v) {
        if ((set >> v) & 1U) continue;
        if (std::none_of(in.begin(), in.end(), [&](int u) { return adj(m, u, v); })) return false;
    }
    return p == Problem::ds || component_count(m, in) == 1;
}

// Minimum size over all 2^n subsets.
inline int optimum(const pocfvs::Graph& g, Problem p) {
    const int n = g.vertex_count();
    const Matrix m = matrix(g);
    int best = n;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int k = __builtin_popcountll(s);
        if (k < best && satisfies(m, n, s, p)) best = k;
    }
    return best;
}

inline bool isomorphic(const pocfvs::Graph& a, const pocfvs::Graph& b) {
    const int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    const Matrix ma = matrix(a), mb = matrix(b);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                ok = adj(ma, u, v) == adj(mb, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Induced containment by checking every vertex subset of the host's size
// |pattern| for isomorphism with the pattern.
inline bool contains_induced(const pocfvs::Graph& pattern, const pocfvs::Graph& host) {
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n) return false;
    const Matrix mh = matrix(host);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (__builtin_popcountll(s) != k) continue;
        const std::vector<int> vs = members(s, n);
        pocfvs::Graph sub(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (adj(mh, vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)])) sub.add_edge(a, b);
        if (isomorphic(pattern, sub)) return true;
    }
    return false;
}

// Lexicographically smallest upper-triangle code over all relabellings.
inline std::vector<bool> brute_canonical_code(const pocfvs::Graph& g) {
    const int n = g.vertex_count();
    const Matrix m = matrix(g);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<bool> best;
    do {
        std::vector<bool> code;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                code.push_back(adj(m, perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// Number of isomorphism classes of connected graphs on n vertices by
// orbit counting: average, over all permutations, of the connected graphs
// each permutation fixes. Fixed graphs are unions of edge orbits.
inline long long connected_class_count(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::map<std::vector<int>, long long> by_cycle_type;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    long long total = 0;
    long long perms = 0;
    do {
        ++perms;
        std::vector<int> type;
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v = 0; v < n; ++v) {
            int len = 0;
            for (int w = v; !seen[static_cast<std::size_t>(w)]; w = perm[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++len;
            }
            if (len) type.push_back(len);
        }
        std::sort(type.begin(), type.end());
        auto it = by_cycle_type.find(type);
        if (it != by_cycle_type.end()) {
            total += it->second;
            continue;
        }
        // Edge orbits under perm.
        std::map<std::pair<int, int>, int> orbit_of;
        std::vector<std::vector<std::pair<int, int>>> orbits;
        for (auto e : pairs) {
            if (orbit_of.count(e)) continue;
            std::vector<std::pair<int, int>> orbit;
            auto cur = e;
            while (!orbit_of.count(cur)) {
                orbit_of[cur] = static_cast<int>(orbits.size());
                orbit.push_back(cur);
                int a = perm[static_cast<std::size_t>(cur.first)], b = perm[static_cast<std::size_t>(cur.second)];
                cur = {std::min(a, b), std::max(a, b)};
            }
            orbits.push_back(orbit);
        }
        long long fixed = 0;
        const std::size_t k = orbits.size();
        for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << k); ++pick) {
            std::vector<std::uint64_t> nb(static_cast<std::size_t>(n), 0);
            for (std::size_t o = 0; o < k; ++o) {
                if (!((pick >> o) & 1U)) continue;
                for (auto [a, b] : orbits[o]) {
                    nb[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                    nb[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
                }
            }
            std::uint64_t reached = 1, frontier = 1;
            while (frontier) {
                std::uint64_t next = 0;
                for (int v = 0; v < n; ++v)
                    if ((frontier >> v) & 1U) next |= nb[static_cast<std::size_t>(v)];
                frontier = next & ~reached;
                reached |= next;
            }
            if (reached == (std::uint64_t{1} << n) - 1) ++fixed;
        }
        by_cycle_type[type] = fixed;
        total += fixed;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / perms;
}

inline pocfvs::Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    pocfvs::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline pocfvs::Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    for (;;) {
        pocfvs::Graph g = random_graph(rng, n, p);
        if (connected(g)) return g;
    }
}

inline pocfvs::Graph relabel(const pocfvs::Graph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    pocfvs::Graph h(g.vertex_count());
    for (auto [a, b] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
    return h;
}

}  // namespace oracle
