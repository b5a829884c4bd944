#include "pocfvs/constructive.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "pocfvs/errors.hpp"
#include "pocfvs/generators.hpp"
#include "pocfvs/iso.hpp"

namespace pocfvs {

TraceStep& ProcedureTrace::add_step(std::string name, std::optional<VertexSet> current, std::string note) {
    steps.push_back(TraceStep{std::move(name), {}, current, std::move(note)});
    return steps.back();
}

void ProcedureTrace::absorb(const ProcedureTrace& inner, const std::string& prefix) {
    for (TraceStep step : inner.steps) {
        step.name = prefix + step.name;
        steps.push_back(std::move(step));
    }
    swaps.insert(swaps.end(), inner.swaps.begin(), inner.swaps.end());
}

std::string ProcedureTrace::to_json() const {
    using nlohmann::json;
    json j;
    j["method"] = method;
    j["s"] = s_param;
    j["fvs"] = fvs;
    j["claimed_bound"] = claimed_bound;
    j["bound_expression"] = bound_expression;
    j["actual_size"] = actual_size();
    j["result"] = result.to_vector();
    json steps_json = json::array();
    for (const auto& step : steps) {
        json s;
        s["step"] = step.name;
        json sets = json::object();
        for (const auto& [name, set] : step.sets) sets[name] = set.to_vector();
        s["sets"] = sets;
        if (step.current) s["current"] = step.current->to_vector();
        if (!step.note.empty()) s["note"] = step.note;
        steps_json.push_back(s);
    }
    j["steps"] = steps_json;
    json swaps_json = json::array();
    for (const auto& sw : swaps) {
        swaps_json.push_back({{"removed", sw.removed},
                              {"added", sw.added},
                              {"closed_neighborhood_contained", sw.closed_neighborhood_contained}});
    }
    j["swaps"] = swaps_json;
    return j.dump(2);
}

std::string ProcedureTrace::to_text() const {
    std::ostringstream os;
    os << "method " << method;
    if (s_param > 0) os << " (s=" << s_param << ")";
    os << '\n';
    for (const auto& step : steps) {
        os << "  " << step.name;
        for (const auto& [name, set] : step.sets) os << ' ' << name << '=' << set.to_string();
        if (step.current) os << " current=" << step.current->to_string() << " (" << step.current->size() << ')';
        if (!step.note.empty()) os << " -- " << step.note;
        os << '\n';
    }
    for (const auto& sw : swaps) {
        os << "  swap " << sw.removed << " -> " << sw.added
           << (sw.closed_neighborhood_contained ? " [N[x] in N[y]]" : " [VIOLATES N[x] in N[y]]") << '\n';
    }
    os << "result " << result.to_string() << " size " << actual_size() << " bound " << claimed_bound << " ("
       << bound_expression << ")\n";
    return os.str();
}

namespace {

[[noreturn]] void fail(const std::string& what, const Graph& g, const ProcedureTrace& trace) {
    throw InternalError(what + "\ngraph: " + to_string(g) + "\n" + trace.to_text());
}

void check(bool ok, const std::string& what, const Graph& g, const ProcedureTrace& trace) {
    if (!ok) fail(what, g, trace);
}

bool closed_nbhd_contained(const Graph& g, int x, int y) {
    return g.closed_neighborhood(x).is_subset_of(g.closed_neighborhood(y));
}

Mask neighborhood_of(const Graph& g, Mask set) {
    Mask out = 0;
    for (int v : VertexSet(set)) out |= g.neighbors(v);
    return out & ~set;
}

bool is_clique(const Graph& g, Mask set) {
    const int k = std::popcount(set);
    return edge_count_within(g, set) == k * (k - 1) / 2;
}

bool is_independent(const Graph& g, Mask set) { return edge_count_within(g, set) == 0; }

int component_containing(const std::vector<VertexSet>& comps, int v) {
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (comps[k].contains(v)) return static_cast<int>(k);
    return -1;
}

// Smallest subset of `pool` (first in colex order of the pool's own ordering)
// touching every mask in `targets`.
Mask min_hitting_subset(Mask pool, const std::vector<Mask>& targets) {
    const std::vector<int> members = VertexSet(pool).to_vector();
    const int n = static_cast<int>(members.size());
    for (int k = 0; k <= n; ++k) {
        if (k == 0) {
            if (targets.empty()) return 0;
            continue;
        }
        Mask s = low_bits(k);
        const Mask limit = n >= 64 ? 0 : (Mask{1} << n);
        while (s < limit) {
            Mask chosen = 0;
            for (int b : VertexSet(s)) chosen |= Mask{1} << members[static_cast<std::size_t>(b)];
            if (std::all_of(targets.begin(), targets.end(), [&](Mask t) { return (t & chosen) != 0; })) return chosen;
            const Mask c = s & (~s + 1);
            const Mask r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return pool;
}

void require_connected(const Graph& g, const char* what) {
    if (!is_connected(g)) throw InputError(std::string(what) + " requires a connected graph");
}

}  // namespace

void verify_trace(const Graph& g, const ProcedureTrace& trace) {
    for (const auto& step : trace.steps) {
        if (step.current) check(is_fvs(g, *step.current), "working set after '" + step.name + "' is not an FVS", g, trace);
    }
    for (const auto& sw : trace.swaps) {
        check(sw.closed_neighborhood_contained && closed_nbhd_contained(g, sw.removed, sw.added),
              "swap " + std::to_string(sw.removed) + "->" + std::to_string(sw.added) + " violates N[x] in N[y]", g,
              trace);
    }
    check(is_cfvs(g, trace.result), "result is not a connected FVS", g, trace);
    check(trace.actual_size() <= trace.claimed_bound, "result exceeds the claimed bound", g, trace);
}

ConnectifyResult connectify_by_paths(const Graph& g, VertexSet s) {
    require_connected(g, "connectify_by_paths");
    g.check_set(s);
    if (!is_fvs(g, s)) throw InputError("connectify_by_paths: " + s.to_string() + " is not a feedback vertex set");
    ProcedureTrace trace;
    trace.method = "paths";
    trace.fvs = s.size();
    const int diam = diameter(g);
    trace.claimed_bound = s.size() + std::max(0, s.size() - 1) * std::max(0, diam - 1);
    trace.bound_expression = "|S| + (|S|-1)(diam-1) with |S|=" + std::to_string(s.size()) +
                             ", diam=" + std::to_string(diam);
    VertexSet out = s;
    trace.add_step("input", out).sets.emplace_back("S", s);
    if (!s.empty()) {
        const int x = s.lowest();
        for (int y : s - VertexSet{x}) {
            const std::vector<int> p = shortest_path(g, x, y);
            VertexSet interior;
            for (std::size_t k = 1; k + 1 < p.size(); ++k) interior.insert(p[k]);
            out |= interior;
            auto& step = trace.add_step("path " + std::to_string(x) + "->" + std::to_string(y), out);
            step.sets.emplace_back("interior", interior);
        }
    }
    trace.result = out;
    verify_trace(g, trace);
    return {out, trace};
}

ConnectifyResult connectify_p5sp1(const Graph& g, int s_param, SolverLimits limits) {
    require_connected(g, "connectify_p5sp1");
    if (s_param < 0) throw InputError("connectify_p5sp1 requires s >= 0");
    const Graph forbidden = disjoint_union(path(5), edgeless(s_param));
    if (is_induced_subgraph(forbidden, g)) {
        throw InputError("connectify_p5sp1: graph contains an induced P5+" + std::to_string(s_param) + "P1");
    }
    ProcedureTrace trace;
    trace.method = "p5";
    trace.s_param = s_param;
    const SolveResult fvs = min_fvs(g, limits);
    trace.fvs = fvs.optimum;
    trace.add_step("min_fvs", fvs.witness).sets.emplace_back("F", fvs.witness);

    const auto p5 = find_induced_embedding(path(5), g);
    VertexSet dominating;
    if (!p5) {
        trace.claimed_bound = fvs.optimum + 3;
        trace.bound_expression = "fvs + 3 (P5-free)";
        const int n = g.vertex_count();
        bool found = false;
        for (int k = 1; k <= n && !found; ++k) {
            Mask s = low_bits(k);
            const Mask limit = Mask{1} << n;
            while (s < limit) {
                const bool shape = is_clique(g, s) || (k == 3 && edge_count_within(g, s) == 2);
                if (shape && is_dominating(g, VertexSet(s))) {
                    dominating = VertexSet(s);
                    found = true;
                    break;
                }
                const Mask c = s & (~s + 1);
                const Mask r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        check(found, "P5-free graph has no dominating clique or dominating induced P3", g, trace);
        auto& step = trace.add_step("dominating clique/P3", fvs.witness | dominating,
                                    is_clique(g, dominating.bits()) ? "clique" : "induced P3");
        step.sets.emplace_back("D", dominating);
    } else {
        trace.claimed_bound = fvs.optimum + 3 * s_param + 10;
        trace.bound_expression = "fvs + 3s + 10";
        const VertexSet pv = VertexSet::from(*p5);
        Mask closed = pv.bits();
        for (int v : pv) closed |= g.neighbors(v);
        Mask independent = 0;
        for (int v : VertexSet(g.all() & ~closed)) {
            if ((g.neighbors(v) & independent) == 0) independent |= Mask{1} << v;
        }
        auto& step = trace.add_step("induced P5 and maximal independent set outside N[P5]");
        step.sets.emplace_back("P5", pv);
        step.sets.emplace_back("N[P5]", VertexSet(closed));
        step.sets.emplace_back("I", VertexSet(independent));
        check(std::popcount(independent) <= s_param - 1, "maximal independent set outside N[P5] exceeds s-1", g, trace);
        check(is_dominating(g, pv | VertexSet(independent)), "V(P5) plus I does not dominate", g, trace);
        const SolveResult cds = min_cds(g, limits);
        dominating = cds.witness;
        const int dm_bound = 3 * (5 + std::popcount(independent)) - 2;
        auto& dstep = trace.add_step("minimum connected dominating set", fvs.witness | dominating,
                                     "|D| <= 3(5+|I|)-2 = " + std::to_string(dm_bound));
        dstep.sets.emplace_back("D", dominating);
        check(dominating.size() <= dm_bound, "connected dominating set exceeds 3(5+|I|)-2", g, trace);
    }
    trace.result = fvs.witness | dominating;
    verify_trace(g, trace);
    return {trace.result, trace};
}

namespace {

struct Component {
    VertexSet vertices;
    Mask touches_u = 0;  // neighbours in U
};

}  // namespace

ConnectifyResult move_step(const Graph& g, VertexSet S, int component, VertexSet u, int s_param) {
    require_connected(g, "move_step");
    g.check_set(S);
    g.check_set(u);
    if (s_param < 1) throw InputError("move_step requires s >= 1");
    if (is_induced_subgraph(copies(s_param, path(3)), g)) {
        throw InputError("move_step: graph contains an induced " + std::to_string(s_param) + "P3");
    }
    const std::vector<VertexSet> comps = components_within(g, S.bits());
    if (component < 0 || component >= static_cast<int>(comps.size())) {
        throw InputError("move_step: component index out of range");
    }
    const VertexSet z0 = comps[static_cast<std::size_t>(component)];
    if (s_param > 1 && !is_induced_subgraph(copies(s_param - 1, path(3)), induced_subgraph(g, z0).graph)) {
        throw InputError("move_step: chosen component has no induced (s-1)P3");
    }
    if (u.intersects(S)) throw InputError("move_step: U must be disjoint from S");
    if (!is_independent(g, u.bits())) throw InputError("move_step: U must be independent");

    ProcedureTrace trace;
    trace.method = "move";
    trace.s_param = s_param;
    trace.claimed_bound = S.size() + 2 * s_param - 2;
    trace.bound_expression = "|S| + 2s - 2";
    {
        auto& step = trace.add_step("input", S);
        step.sets.emplace_back("Z", z0);
        step.sets.emplace_back("U", u);
    }

    std::vector<Component> a;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        if (static_cast<int>(k) == component) continue;
        const Mask touch = neighborhood_of(g, comps[k].bits()) & u.bits();
        if (touch) a.push_back({comps[k], touch});
    }
    auto touch_masks = [](const std::vector<Component>& cs) {
        std::vector<Mask> out;
        for (const auto& c : cs) out.push_back(c.touches_u);
        return out;
    };
    auto union_of = [](const std::vector<Component>& cs) {
        VertexSet out;
        for (const auto& c : cs) out |= c.vertices;
        return out;
    };

    const Mask u1 = min_hitting_subset(u.bits(), touch_masks(a));
    std::vector<Component> a1;
    std::vector<Component> a2;
    std::vector<bool> is_private(a.size(), false);
    for (int owner : VertexSet(u1)) {
        bool found = false;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (!is_private[k] && (a[k].touches_u & u1) == (Mask{1} << owner)) {
                is_private[k] = true;
                found = true;
                break;
            }
        }
        check(found, "vertex " + std::to_string(owner) + " of a minimum cover has no private component", g, trace);
    }
    for (std::size_t k = 0; k < a.size(); ++k) (is_private[k] ? a1 : a2).push_back(a[k]);
    const Mask u2 = min_hitting_subset(u1, [&] {
        std::vector<Mask> t;
        for (const auto& c : a2) t.push_back(c.touches_u & u1);
        return t;
    }());
    {
        auto& step = trace.add_step("cover components", S);
        step.sets.emplace_back("A", union_of(a));
        step.sets.emplace_back("U1", VertexSet(u1));
        step.sets.emplace_back("A1", union_of(a1));
        step.sets.emplace_back("A2", union_of(a2));
        step.sets.emplace_back("U2", VertexSet(u2));
    }
    check(std::popcount(u2) < s_param, "|U2| >= s", g, trace);
    for (int v : VertexSet(u2)) {
        check((g.neighbors(v) & z0.bits()) != 0, "U2 vertex " + std::to_string(v) + " not adjacent to Z", g, trace);
    }
    VertexSet current = S | VertexSet(u2);
    VertexSet z = VertexSet(reach_within(g, z0.lowest(), current.bits()));
    trace.add_step("move U2 to Z", current).sets.emplace_back("Z", z);

    const Mask u3 = u.bits() & ~u1;
    std::vector<Component> a3;
    for (const auto& c : a1) {
        if (!c.vertices.is_subset_of(z) && (c.touches_u & u3)) a3.push_back(c);
    }
    const Mask u4 = min_hitting_subset(u3, [&] {
        std::vector<Mask> t;
        for (const auto& c : a3) t.push_back(c.touches_u & u3);
        return t;
    }());
    Mask w = 0;
    for (int v : VertexSet(u4)) {
        int touched = 0;
        for (const auto& c : a3) touched += (c.touches_u >> v) & 1U;
        if (touched >= 2) w |= Mask{1} << v;
    }
    {
        auto& step = trace.add_step("cover remaining private components", current);
        step.sets.emplace_back("A3", union_of(a3));
        step.sets.emplace_back("U4", VertexSet(u4));
        step.sets.emplace_back("W(multi)", VertexSet(w));
    }
    check(std::popcount(u4) < s_param, "|U4| >= s", g, trace);
    for (int v : VertexSet(w)) {
        check((g.neighbors(v) & z.bits()) != 0, "W vertex " + std::to_string(v) + " not adjacent to Z", g, trace);
    }
    for (const auto& c : a3) {
        if (c.touches_u & w) continue;
        const Mask owners = c.touches_u & (u1 & ~u2);
        const Mask privates = c.touches_u & u4;
        check(std::popcount(owners) == 1 && std::popcount(privates) >= 1,
              "component " + c.vertices.to_string() + " lacks its U1 owner or U4 neighbour", g, trace);
        const int owner = std::countr_zero(owners);
        const int other = std::countr_zero(privates);
        if (g.neighbors(owner) & z.bits()) {
            w |= Mask{1} << owner;
        } else if (g.neighbors(other) & z.bits()) {
            w |= Mask{1} << other;
        } else {
            fail("neither neighbour of component " + c.vertices.to_string() + " is adjacent to Z", g, trace);
        }
    }
    check(std::popcount(w) <= s_param - 1, "|W| > s-1", g, trace);
    current |= VertexSet(w);
    z = VertexSet(reach_within(g, z0.lowest(), current.bits()));
    {
        auto& step = trace.add_step("move W to Z", current);
        step.sets.emplace_back("W", VertexSet(w));
        step.sets.emplace_back("Z", z);
    }

    // Postconditions (i)-(iii).
    const VertexSet added = current - S;
    check((z0 | added).is_subset_of(z), "condition (i): Z' does not contain Z and all added vertices", g, trace);
    const VertexSet u_rest = u - current;
    std::vector<VertexSet> others;
    for (VertexSet c : components_within(g, current.bits()))
        if (c != z) others.push_back(c);
    for (int v : u_rest) {
        int touched = 0;
        for (VertexSet c : others) touched += (g.neighbors(v) & c.bits()) ? 1 : 0;
        check(touched <= 1, "condition (ii) fails at " + std::to_string(v), g, trace);
    }
    for (VertexSet c : others) {
        check(std::popcount(neighborhood_of(g, c.bits()) & u_rest.bits()) <= 1,
              "condition (iii) fails at component " + c.to_string(), g, trace);
    }
    trace.result = current;
    check(current.size() <= trace.claimed_bound, "move_step exceeded |S| + 2s - 2", g, trace);
    for (const auto& step : trace.steps) {
        if (step.current) check(is_fvs(g, *step.current), "working set is not an FVS", g, trace);
    }
    return {current, trace};
}

int sp3_constant(int s_param) { return s_param <= 1 ? 0 : 12 * s_param * s_param - 2 * s_param - 2; }

ConnectifyResult connectify_sp3(const Graph& g, int s_param, SolverLimits limits) {
    require_connected(g, "connectify_sp3");
    if (s_param < 1) throw InputError("connectify_sp3 requires s >= 1");
    if (is_induced_subgraph(copies(s_param, path(3)), g)) {
        throw InputError("connectify_sp3: graph contains an induced " + std::to_string(s_param) + "P3");
    }
    const int s = s_param;
    ProcedureTrace trace;
    trace.method = "sp3";
    trace.s_param = s;
    const SolveResult fvs = min_fvs(g, limits);
    trace.fvs = fvs.optimum;
    trace.claimed_bound = fvs.optimum + sp3_constant(s);
    trace.bound_expression = s == 1 ? "fvs + 0 (complete graph)" : "fvs + 12s^2 - 2s - 2";
    trace.add_step("min_fvs", fvs.witness).sets.emplace_back("S", fvs.witness);

    if (s == 1) {
        trace.result = fvs.witness;
        trace.steps.back().note = "P3-free connected graph is complete";
        verify_trace(g, trace);
        return {trace.result, trace};
    }
    const auto h = find_induced_embedding(copies(s - 1, path(3)), g);
    if (!h) {
        ConnectifyResult inner = connectify_sp3(g, s - 1, limits);
        trace.absorb(inner.trace, "[s=" + std::to_string(s - 1) + "] ");
        trace.add_step("recursed", inner.set, "graph is (s-1)P3-free");
        trace.claimed_bound = inner.trace.claimed_bound;
        trace.bound_expression = "fvs + c_{s-1} (" + inner.trace.bound_expression + ")";
        trace.result = inner.set;
        verify_trace(g, trace);
        return {trace.result, trace};
    }

    const VertexSet hv = VertexSet::from(*h);
    std::vector<int> centers;
    for (int t = 0; t < s - 1; ++t) centers.push_back((*h)[static_cast<std::size_t>(3 * t + 1)]);
    VertexSet y = hv;
    for (std::size_t t = 1; t < centers.size(); ++t) {
        for (int v : shortest_path(g, centers[0], centers[t])) y.insert(v);
    }
    VertexSet current = fvs.witness | y;
    {
        auto& step = trace.add_step("Y from induced (s-1)P3 and center paths", current);
        step.sets.emplace_back("H", hv);
        step.sets.emplace_back("Y", y);
    }
    check(y.size() <= 4 * s * s - 4 * s, "|Y| > 4s^2 - 4s", g, trace);
    const int anchor = y.lowest();
    {
        const auto comps = components_within(g, current.bits());
        for (VertexSet c : comps) {
            if (c.contains(anchor)) continue;
            check(is_clique(g, c.bits()), "component " + c.to_string() + " of G[S'] outside Z is not complete", g,
                  trace);
        }
    }

    Mask forest = g.all() & ~current.bits();
    Mask high = 0;
    for (int v : VertexSet(forest))
        if (std::popcount(g.neighbors(v) & forest) >= 3) high |= Mask{1} << v;
    check(std::popcount(high) <= 4 * s * s, "forest has more than 4s^2 vertices of degree >= 3", g, trace);
    current |= VertexSet(high);
    trace.add_step("absorb forest vertices of degree >= 3", current).sets.emplace_back("added", VertexSet(high));

    forest = g.all() & ~current.bits();
    Mask mid = 0;
    for (int v : VertexSet(forest))
        if (std::popcount(g.neighbors(v) & forest) == 2) mid |= Mask{1} << v;
    check(std::popcount(mid) <= 4 * s, "linear forest has more than 4s vertices of degree 2", g, trace);
    current |= VertexSet(mid);
    trace.add_step("absorb forest vertices of degree 2", current).sets.emplace_back("added", VertexSet(mid));

    forest = g.all() & ~current.bits();
    Mask u1 = 0;
    Mask u2 = 0;
    for (VertexSet c : components_within(g, forest)) {
        check(c.size() <= 2, "remaining forest component " + c.to_string() + " is not K1 or K2", g, trace);
        if (c.size() == 2) {
            u1 |= Mask{1} << c.lowest();
            u2 |= c.bits() & ~(Mask{1} << c.lowest());
        } else {
            u2 |= c.bits();
        }
    }
    {
        auto& step = trace.add_step("partition K1/K2 forest", current);
        step.sets.emplace_back("U1", VertexSet(u1));
        step.sets.emplace_back("U2", VertexSet(u2));
    }
    check(current.size() <= fvs.optimum + 8 * s * s, "|S'| > |S| + 8s^2", g, trace);

    for (const auto& [label, pool] : {std::pair<const char*, Mask>{"U1", u1}, std::pair<const char*, Mask>{"U2", u2}}) {
        const auto comps = components_within(g, current.bits());
        const int zi = component_containing(comps, anchor);
        ConnectifyResult moved = move_step(g, current, zi, VertexSet(pool), s);
        trace.absorb(moved.trace, std::string("move[") + label + "] ");
        current = moved.set;
    }
    check(current.size() <= fvs.optimum + 8 * s * s + 4 * s - 4, "|S'| > |S| + 8s^2 + 4s - 4", g, trace);

    const Mask u1p = u1 & ~current.bits();
    const Mask u2p = u2 & ~current.bits();
    VertexSet z(reach_within(g, anchor, current.bits()));
    std::vector<VertexSet> family;
    for (VertexSet c : components_within(g, current.bits()))
        if (c != z) family.push_back(c);
    {
        auto& step = trace.add_step("after moves", current);
        step.sets.emplace_back("Z", z);
        step.sets.emplace_back("U1'", VertexSet(u1p));
        step.sets.emplace_back("U2'", VertexSet(u2p));
    }
    for (const auto& [mine, theirs] : {std::pair<Mask, Mask>{u1p, u2p}, std::pair<Mask, Mask>{u2p, u1p}}) {
        check(is_independent(g, mine), "property 1: U' not independent", g, trace);
        for (int v : VertexSet(mine)) {
            check(std::popcount(g.neighbors(v) & theirs) <= 1, "property 2 fails at " + std::to_string(v), g, trace);
            int touched = 0;
            for (VertexSet c : family) touched += (g.neighbors(v) & c.bits()) ? 1 : 0;
            check(touched <= 1, "property 3 fails at " + std::to_string(v), g, trace);
        }
        for (VertexSet c : family) {
            check(std::popcount(neighborhood_of(g, c.bits()) & mine) <= 1,
                  "property 3 fails at component " + c.to_string(), g, trace);
        }
    }

    int absorbed = 0;
    for (VertexSet x : components_within(g, g.all() & ~z.bits())) {
        if (is_clique(g, x.bits())) continue;
        ++absorbed;
        check((neighborhood_of(g, x.bits()) & z.bits()) != 0, "P3-component " + x.to_string() + " not adjacent to Z",
              g, trace);
        check(std::popcount(x.bits() & (u1p | u2p)) <= 4 * s - 2,
              "P3-component " + x.to_string() + " has more than 4s-2 U' vertices", g, trace);
        current |= x;
        trace.add_step("absorb component containing induced P3", current).sets.emplace_back("X", x);
    }
    check(absorbed <= s - 1, "more than s-1 components of G-Z contain an induced P3", g, trace);
    check(current.size() <= fvs.optimum + sp3_constant(s), "|S'| > |S| + 12s^2 - 2s - 2", g, trace);

    while (true) {
        const auto comps = components_within(g, current.bits());
        if (comps.size() <= 1) break;
        z = VertexSet(reach_within(g, anchor, current.bits()));
        VertexSet a;
        for (VertexSet c : comps) {
            if (c != z) {
                a = c;
                break;
            }
        }
        const Mask outside = g.all() & ~current.bits();
        std::vector<VertexSet> partners;
        for (VertexSet b : components_within(g, outside))
            if (neighborhood_of(g, a.bits()) & b.bits()) partners.push_back(b);
        check(partners.size() == 1, "component " + a.to_string() + " does not have a unique partner B_A", g, trace);
        check(is_clique(g, (a | partners[0]).bits()), "G[A + B_A] is not complete", g, trace);
        const int x = a.lowest();
        int yv = -1;
        for (int v : partners[0]) {
            if (g.neighbors(v) & z.bits()) {
                yv = v;
                break;
            }
        }
        check(yv >= 0, "B_A has no vertex adjacent to Z", g, trace);
        const bool contained = closed_nbhd_contained(g, x, yv);
        trace.swaps.push_back({x, yv, contained});
        check(contained, "swap violates N[x] in N[y]", g, trace);
        current.erase(x);
        current.insert(yv);
        trace.add_step("swap " + std::to_string(x) + " -> " + std::to_string(yv), current);
        check(is_fvs(g, current), "swap broke the FVS property", g, trace);
    }
    trace.result = current;
    verify_trace(g, trace);
    return {current, trace};
}

}  // namespace pocfvs
