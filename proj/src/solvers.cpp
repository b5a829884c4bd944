#include "pocfvs/solvers.hpp"

#include <cstdlib>
#include <string>

#include "pocfvs/errors.hpp"

namespace pocfvs {

namespace {

void check_limit(const Graph& g, const SolverLimits& limits, const char* what) {
    if (g.vertex_count() > limits.max_vertices || g.vertex_count() >= kMaxVertices) {
        throw ResourceError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                            " vertices, limit is " + std::to_string(limits.max_vertices));
    }
}

// Calls fn(mask) for every k-subset of {0..n-1} in increasing mask order until
// fn returns true. Returns whether fn accepted a subset.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, std::uint64_t& visited, Fn&& fn) {
    if (k < 0 || k > n) return false;
    if (k == 0) {
        ++visited;
        return fn(Mask{0});
    }
    const Mask limit = Mask{1} << n;
    Mask s = low_bits(k);
    while (s < limit) {
        ++visited;
        if (fn(s)) return true;
        const Mask c = s & (~s + 1);
        const Mask r = s + c;
        if (r == 0) break;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return false;
}

// Repeatedly drops vertices with at most one neighbour inside `alive`. What
// remains is empty iff g[alive] was a forest.
Mask two_core(const Graph& g, Mask alive) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : VertexSet(alive)) {
            if (std::popcount(g.neighbors(v) & alive) <= 1) {
                alive &= ~(Mask{1} << v);
                changed = true;
            }
        }
    }
    return alive;
}

// Vertices of a shortest cycle in g[alive]; alive must contain a cycle.
Mask shortest_cycle(const Graph& g, Mask alive) {
    const int n = g.vertex_count();
    int best_len = n + 1;
    Mask best = 0;
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<int> queue;
    for (int root : VertexSet(alive)) {
        for (int v : VertexSet(alive)) dist[static_cast<std::size_t>(v)] = -1;
        queue.assign(1, root);
        dist[static_cast<std::size_t>(root)] = 0;
        parent[static_cast<std::size_t>(root)] = -1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            const int du = dist[static_cast<std::size_t>(u)];
            if (2 * du + 1 >= best_len) break;
            for (int w : VertexSet(g.neighbors(u) & alive)) {
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] = du + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    queue.push_back(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    const int len = du + dist[static_cast<std::size_t>(w)] + 1;
                    if (len < best_len) {
                        Mask cyc = 0;
                        int a = u;
                        int b = w;
                        while (a != b) {
                            if (dist[static_cast<std::size_t>(a)] >= dist[static_cast<std::size_t>(b)]) {
                                cyc |= Mask{1} << a;
                                a = parent[static_cast<std::size_t>(a)];
                            } else {
                                cyc |= Mask{1} << b;
                                b = parent[static_cast<std::size_t>(b)];
                            }
                        }
                        cyc |= Mask{1} << a;
                        best = cyc;
                        best_len = std::popcount(cyc);
                    }
                }
            }
        }
    }
    return best;
}

class FvsSearch {
public:
    explicit FvsSearch(const Graph& g) : g_(g) {}

    bool solve(int budget) { return branch(two_core(g_, g_.all()), budget, 0); }

    Mask witness() const { return witness_; }
    std::uint64_t explored() const { return explored_; }

private:
    bool branch(Mask alive, int budget, Mask chosen) {
        ++explored_;
        if (alive == 0) {
            witness_ = chosen;
            return true;
        }
        if (budget == 0) return false;
        for (int v : VertexSet(shortest_cycle(g_, alive))) {
            Mask rest = two_core(g_, alive & ~(Mask{1} << v));
            if (branch(rest, budget - 1, chosen | (Mask{1} << v))) return true;
        }
        return false;
    }

    const Graph& g_;
    Mask witness_ = 0;
    std::uint64_t explored_ = 0;
};

}  // namespace

SolverLimits limits_from_environment() {
    SolverLimits limits;
    if (const char* env = std::getenv("POCFVS_MAX_VERTICES")) {
        try {
            limits.max_vertices = std::stoi(env);
        } catch (const std::exception&) {
            throw InputError(std::string("POCFVS_MAX_VERTICES is not an integer: ") + env);
        }
    }
    return limits;
}

bool is_fvs(const Graph& g, VertexSet s) {
    g.check_set(s);
    return is_acyclic_within(g, g.all() & ~s.bits());
}

bool is_cfvs(const Graph& g, VertexSet s) {
    return is_fvs(g, s) && (s.empty() || is_connected_within(g, s.bits()));
}

bool is_dominating(const Graph& g, VertexSet s) {
    g.check_set(s);
    Mask covered = s.bits();
    for (int v : s) covered |= g.neighbors(v);
    return covered == g.all();
}

bool is_connected_dominating(const Graph& g, VertexSet s) {
    return is_dominating(g, s) && is_connected_within(g, s.bits());
}

SolveResult min_fvs(const Graph& g, SolverLimits limits) {
    check_limit(g, limits, "min_fvs");
    FvsSearch search(g);
    for (int budget = 0;; ++budget) {
        if (search.solve(budget)) {
            return SolveResult{budget, VertexSet(search.witness()), search.explored()};
        }
    }
}

SolveResult min_cfvs(const Graph& g, SolverLimits limits) {
    check_limit(g, limits, "min_cfvs");
    if (!is_connected(g)) throw DomainError("min_cfvs requires a connected graph");
    const SolveResult lower = min_fvs(g, limits);
    SolveResult out;
    out.explored = lower.explored;
    const int n = g.vertex_count();
    for (int k = lower.optimum; k <= n; ++k) {
        Mask found = 0;
        bool ok = for_each_subset_of_size(n, k, out.explored, [&](Mask s) {
            if (!is_acyclic_within(g, g.all() & ~s)) return false;
            if (s != 0 && !is_connected_within(g, s)) return false;
            found = s;
            return true;
        });
        if (ok) {
            out.optimum = k;
            out.witness = VertexSet(found);
            return out;
        }
    }
    throw InternalError("min_cfvs: the full vertex set should always qualify");
}

namespace {

SolveResult min_dominating(const Graph& g, bool connected) {
    SolveResult out;
    const int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        Mask found = 0;
        bool ok = for_each_subset_of_size(n, k, out.explored, [&](Mask s) {
            if (!is_dominating(g, VertexSet(s))) return false;
            if (connected && !is_connected_within(g, s)) return false;
            found = s;
            return true;
        });
        if (ok) {
            out.optimum = k;
            out.witness = VertexSet(found);
            return out;
        }
    }
    throw InternalError("dominating set search exhausted");
}

}  // namespace

SolveResult min_ds(const Graph& g, SolverLimits limits) {
    check_limit(g, limits, "min_ds");
    return min_dominating(g, false);
}

SolveResult min_cds(const Graph& g, SolverLimits limits) {
    check_limit(g, limits, "min_cds");
    if (!is_connected(g)) throw DomainError("min_cds requires a connected graph");
    return min_dominating(g, true);
}

bool on_cycle(const Graph& g, int v) {
    g.check_vertex(v);
    const Mask rest = g.all() & ~(Mask{1} << v);
    for (VertexSet comp : components_within(g, rest)) {
        if (std::popcount(comp.bits() & g.neighbors(v)) >= 2) return true;
    }
    return false;
}

namespace {

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

SolveResult normalize_min_fvs(const Graph& g, SolverLimits limits) {
    check_limit(g, limits, "normalize_min_fvs");
    if (!is_connected(g)) throw DomainError("normalize_min_fvs requires a connected graph");
    if (is_cycle_graph(g)) throw DomainError("normalize_min_fvs is undefined on a cycle");
    const SolveResult base = min_fvs(g, limits);
    SolveResult out{base.optimum, {}, base.explored};
    Mask found = 0;
    bool ok = for_each_subset_of_size(g.vertex_count(), base.optimum, out.explored, [&](Mask s) {
        if (!is_fvs(g, VertexSet(s))) return false;
        for (int v : VertexSet(s))
            if (g.degree(v) < 3 || !on_cycle(g, v)) return false;
        found = s;
        return true;
    });
    if (!ok) {
        throw InternalError("no minimum feedback vertex set of " + to_string(g) +
                            " consists of degree>=3 cycle vertices");
    }
    out.witness = VertexSet(found);
    return out;
}

Rational poc_ratio(const Graph& g, SolverLimits limits) {
    const SolveResult cf = min_cfvs(g, limits);
    const SolveResult f = min_fvs(g, limits);
    if (f.optimum == 0) throw DomainError("poc ratio undefined for a forest (fvs = 0)");
    return Rational(cf.optimum, f.optimum);
}

int poc_difference(const Graph& g, SolverLimits limits) {
    return min_cfvs(g, limits).optimum - min_fvs(g, limits).optimum;
}

}  // namespace pocfvs
