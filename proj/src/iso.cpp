#include "pocfvs/iso.hpp"

#include <algorithm>
#include <map>

namespace pocfvs {

namespace {

struct MatchPlan {
    std::vector<int> order;                 // pattern vertices in matching order
    std::vector<std::vector<int>> earlier;  // earlier positions, per position
    std::vector<std::vector<bool>> linked;  // adjacency to those earlier positions
};

MatchPlan plan_matching(const Graph& pattern) {
    const int n = pattern.vertex_count();
    MatchPlan plan;
    Mask placed = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        int best_links = -1;
        int best_degree = -1;
        for (int v : VertexSet(pattern.all() & ~placed)) {
            int links = std::popcount(pattern.neighbors(v) & placed);
            int degree = pattern.degree(v);
            if (links > best_links || (links == best_links && degree > best_degree)) {
                best = v;
                best_links = links;
                best_degree = degree;
            }
        }
        plan.order.push_back(best);
        placed |= Mask{1} << best;
    }
    plan.earlier.resize(static_cast<std::size_t>(n));
    plan.linked.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            plan.earlier[static_cast<std::size_t>(i)].push_back(j);
            plan.linked[static_cast<std::size_t>(i)].push_back(
                pattern.adjacent(plan.order[static_cast<std::size_t>(i)], plan.order[static_cast<std::size_t>(j)]));
        }
    }
    return plan;
}

class Matcher {
public:
    Matcher(const Graph& pattern, const Graph& host)
        : pattern_(pattern), host_(host), plan_(plan_matching(pattern)) {
        const int max_deg = pattern.vertex_count();
        by_degree_.assign(static_cast<std::size_t>(max_deg + 1), 0);
        for (int d = 0; d <= max_deg; ++d) {
            for (int v = 0; v < host.vertex_count(); ++v)
                if (host.degree(v) >= d) by_degree_[static_cast<std::size_t>(d)] |= Mask{1} << v;
        }
        image_.assign(static_cast<std::size_t>(pattern.vertex_count()), -1);
    }

    std::optional<Embedding> run() {
        if (!extend(0, 0)) return std::nullopt;
        Embedding out(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) out[static_cast<std::size_t>(plan_.order[i])] = image_[i];
        return out;
    }

private:
    bool extend(std::size_t pos, Mask used) {
        if (pos == image_.size()) return true;
        const int pv = plan_.order[pos];
        Mask cand = by_degree_[static_cast<std::size_t>(pattern_.degree(pv))] & ~used;
        const auto& earlier = plan_.earlier[pos];
        const auto& linked = plan_.linked[pos];
        for (std::size_t t = 0; t < earlier.size() && cand; ++t) {
            Mask nb = host_.neighbors(image_[static_cast<std::size_t>(earlier[t])]);
            cand &= linked[t] ? nb : ~nb;
        }
        for (int hv : VertexSet(cand)) {
            image_[pos] = hv;
            if (extend(pos + 1, used | (Mask{1} << hv))) return true;
        }
        image_[pos] = -1;
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    MatchPlan plan_;
    std::vector<Mask> by_degree_;
    std::vector<int> image_;
};

}  // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
    if (pattern.vertex_count() == 0) return Embedding{};
    return Matcher(pattern, host).run();
}

bool is_induced_subgraph(const Graph& pattern, const Graph& host) {
    return find_induced_embedding(pattern, host).has_value();
}

bool is_embedding(const Graph& pattern, const Graph& host, const Embedding& map) {
    if (static_cast<int>(map.size()) != pattern.vertex_count()) return false;
    Mask used = 0;
    for (int v : map) {
        if (v < 0 || v >= host.vertex_count() || ((used >> v) & 1U)) return false;
        used |= Mask{1} << v;
    }
    for (int a = 0; a < pattern.vertex_count(); ++a)
        for (int b = a + 1; b < pattern.vertex_count(); ++b)
            if (pattern.adjacent(a, b) != host.adjacent(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
                return false;
    return true;
}

bool is_free(const Graph& g, const std::vector<Graph>& family) {
    return std::none_of(family.begin(), family.end(), [&](const Graph& h) { return is_induced_subgraph(h, g); });
}

namespace {

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d;
    for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    if (sorted_degrees(a) != sorted_degrees(b)) return false;
    return is_induced_subgraph(a, b);
}

namespace {

using Coloring = std::vector<int>;

int cell_count(const Coloring& c) {
    return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Splits cells by the multiset of neighbour colours until stable. New colours
// are ranks of (old colour, neighbour-colour histogram), so cell order is
// preserved and the result depends only on the isomorphism type.
void refine(const Graph& g, Coloring& color) {
    const int n = g.vertex_count();
    int cells = cell_count(color);
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> keyed;
        keyed.reserve(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int> key{color[static_cast<std::size_t>(v)]};
            std::vector<int> nb;
            for (int u : VertexSet(g.neighbors(v))) nb.push_back(color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            key.insert(key.end(), nb.begin(), nb.end());
            keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        Coloring next(static_cast<std::size_t>(n));
        int rank = -1;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i == 0 || keyed[i].first != keyed[i - 1].first) ++rank;
            next[static_cast<std::size_t>(keyed[i].second)] = rank;
        }
        color = std::move(next);
        if (rank + 1 == cells) return;
        cells = rank + 1;
    }
}

std::vector<std::uint64_t> encode(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]))
                code[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
        }
    }
    return code;
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g) {}

    CanonicalForm run() {
        Coloring color(static_cast<std::size_t>(g_.vertex_count()), 0);
        refine(g_, color);
        descend(color);
        return CanonicalForm{g_.vertex_count(), best_code_, best_order_};
    }

private:
    void descend(const Coloring& color) {
        const int n = g_.vertex_count();
        const int cells = cell_count(color);
        if (cells == n) {
            std::vector<int> order(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
            auto code = encode(g_, order);
            if (!have_best_ || code > best_code_) {
                best_code_ = std::move(code);
                best_order_ = std::move(order);
                have_best_ = true;
            }
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(cells), 0);
        for (int c : color) ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1) ++target;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
                Mask strip = (Mask{1} << u) | (Mask{1} << v);
                return (g_.neighbors(u) & ~strip) == (g_.neighbors(v) & ~strip);
            });
            if (twin) continue;
            tried.push_back(v);
            Coloring child = color;
            for (int u = 0; u < n; ++u) {
                int& c = child[static_cast<std::size_t>(u)];
                if (c > target || (c == target && u != v)) ++c;
            }
            refine(g_, child);
            descend(child);
        }
    }

    const Graph& g_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_code_;
    std::vector<int> best_order_;
};

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const {
    std::size_t h = std::hash<int>{}(f.vertex_count);
    for (auto w : f.code) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

CanonicalForm canonical_form(const Graph& g) {
    if (g.vertex_count() == 0) return CanonicalForm{};
    return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) {
    const CanonicalForm form = canonical_form(g);
    std::vector<int> position(form.order.size());
    for (std::size_t k = 0; k < form.order.size(); ++k) position[static_cast<std::size_t>(form.order[k])] = static_cast<int>(k);
    Graph out(g.vertex_count());
    for (auto [u, v] : g.edges()) out.add_edge(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
    return out;
}

bool is_linear_forest(const Graph& g) { return max_degree(g) <= 2 && is_acyclic(g); }

}  // namespace pocfvs
