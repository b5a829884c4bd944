#include "pocfvs/generators.hpp"

#include <cctype>
#include <sstream>

#include "pocfvs/errors.hpp"

namespace pocfvs {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

// Adds a path of `length` fresh vertices starting at index `first`, hung off
// `anchor` (or free-standing when anchor < 0).
void hang_path(Graph& g, int anchor, int first, int length) {
    for (int t = 0; t < length; ++t) {
        int v = first + t;
        if (t == 0) {
            if (anchor >= 0) g.add_edge(anchor, v);
        } else {
            g.add_edge(v - 1, v);
        }
    }
}

}  // namespace

Graph path(int k) {
    require(k >= 1, "path requires k >= 1");
    Graph g(k);
    hang_path(g, -1, 0, k);
    return g;
}

Graph cycle(int r) {
    require(r >= 3, "cycle requires r >= 3");
    Graph g = path(r);
    g.add_edge(r - 1, 0);
    return g;
}

Graph complete(int n) {
    require(n >= 1, "complete graph requires n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless(int n) {
    require(n >= 0, "edgeless graph requires n >= 0");
    return Graph(n);
}

ButterflyHubs butterfly_hubs(int i, int j, int k) {
    require(i >= 3 && j >= 3 && k >= 1, "butterfly requires i, j >= 3 and k >= 1");
    return {0, i + k - 1};
}

Graph butterfly(int i, int j, int k) {
    const auto [x, y] = butterfly_hubs(i, j, k);
    Graph g(i + j + k - 1);
    for (int t = 0; t < i; ++t) g.add_edge(t, (t + 1) % i);
    hang_path(g, x, i, k - 1);
    g.add_edge(k == 1 ? x : i + k - 2, y);
    for (int t = 0; t < j; ++t) g.add_edge(y + t, y + (t + 1) % j);
    return g;
}

Graph spider(int k, int p, int q) {
    require(k >= 1 && p >= 1 && q >= 1, "spider requires k, p, q >= 1");
    Graph g(k + p + q + 1);
    hang_path(g, 0, 1, k);
    hang_path(g, 0, 1 + k, p);
    hang_path(g, 0, 1 + k + p, q);
    return g;
}

Graph tadpole(int k, int r) {
    require(k >= 0 && r >= 3, "tadpole requires k >= 0 and r >= 3");
    Graph g(k + r);
    for (int t = 0; t < r; ++t) g.add_edge(t, (t + 1) % r);
    hang_path(g, 0, r, k);
    return g;
}

Graph hourglass() { return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

Graph hourglass_chain(int k) {
    require(k >= 1, "L_k requires k >= 1");
    Graph g(5 * k + 1);
    for (int t = 0; t < k; ++t) {
        const int y = hourglass_center(t);
        g.add_edge(y, y + 1);
        g.add_edge(y, y + 2);
        g.add_edge(y + 1, y + 2);
        g.add_edge(y, y + 3);
        g.add_edge(y, y + 4);
        g.add_edge(y + 3, y + 4);
        for (int d = 1; d <= 4; ++d) g.add_edge(0, y + d);
    }
    return g;
}

Graph complete_bipartite(int m, int n) {
    require(m >= 1 && n >= 1, "complete bipartite graph requires m, n >= 1");
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < m + n; ++v) g.add_edge(u, v);
    return g;
}

Graph three_p1_witness() {
    Graph g = disjoint_union(path(4), edgeless(2));
    for (int hub = 4; hub <= 5; ++hub)
        for (int v = 0; v < 4; ++v) g.add_edge(hub, v);
    return g;
}

Graph gprime(const std::array<int, 6>& subdivisions) {
    constexpr std::array<std::pair<int, int>, 6> ends{{{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}}};
    int n = 3;
    for (int t : subdivisions) {
        require(t >= 1, "gprime subdivision counts must be >= 1");
        n += t;
    }
    Graph g(n);
    int next = 3;
    for (std::size_t e = 0; e < ends.size(); ++e) {
        const int t = subdivisions[e];
        hang_path(g, ends[e].first, next, t);
        g.add_edge(next + t - 1, ends[e].second);
        next += t;
    }
    return g;
}

Graph gprime_uniform(int t) { return gprime({t, t, t, t, t, t}); }

Graph copies(int s, const Graph& h) {
    require(s >= 0, "copies requires s >= 0");
    Graph out;
    for (int t = 0; t < s; ++t) out = disjoint_union(out, h);
    return out;
}

namespace {

void require_params(const FamilySpec& spec, std::size_t count, const char* name) {
    require(spec.params.size() == count,
            std::string(name) + " expects " + std::to_string(count) + " parameter(s)");
}

}  // namespace

Graph from_spec(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::path:
            require_params(spec, 1, "path");
            return path(p[0]);
        case Family::cycle:
            require_params(spec, 1, "cycle");
            return cycle(p[0]);
        case Family::complete:
            require_params(spec, 1, "complete");
            return complete(p[0]);
        case Family::edgeless:
            require_params(spec, 1, "edgeless");
            return edgeless(p[0]);
        case Family::butterfly:
            require_params(spec, 3, "butterfly");
            return butterfly(p[0], p[1], p[2]);
        case Family::spider:
            require_params(spec, 3, "spider");
            return spider(p[0], p[1], p[2]);
        case Family::tadpole:
            require_params(spec, 2, "tadpole");
            return tadpole(p[0], p[1]);
        case Family::hourglass:
            require_params(spec, 0, "hourglass");
            return hourglass();
        case Family::hourglass_chain:
            require_params(spec, 1, "Lk");
            return hourglass_chain(p[0]);
        case Family::complete_bipartite:
            require_params(spec, 2, "kbip");
            return complete_bipartite(p[0], p[1]);
        case Family::copies:
            require_params(spec, 1, "copies");
            require(spec.parts.size() == 1, "copies expects exactly one operand");
            return copies(p[0], from_spec(spec.parts[0]));
        case Family::disjoint_union: {
            require(!spec.parts.empty(), "union expects operands");
            Graph out;
            for (const auto& part : spec.parts) out = disjoint_union(out, from_spec(part));
            return out;
        }
        case Family::p5_witness:
            require_params(spec, 1, "p5witness");
            return disjoint_union(path(5), edgeless(p[0]));
        case Family::three_p1_witness:
            require_params(spec, 0, "threeP1");
            return three_p1_witness();
        case Family::gprime:
            if (p.size() == 1) return gprime_uniform(p[0]);
            require_params(spec, 6, "gprime");
            return gprime({p[0], p[1], p[2], p[3], p[4], p[5]});
        case Family::claw:
            require_params(spec, 0, "claw");
            return spider(1, 1, 1);
    }
    throw InputError("unknown family");
}

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

int to_int(const std::string& s, const std::string& context) {
    require(all_digits(s), "expected a non-negative integer in '" + context + "', got '" + s + "'");
    require(s.size() <= 6, "integer too large in '" + context + "'");
    return std::stoi(s);
}

std::vector<int> parse_int_list(const std::string& s, const std::string& context) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_int(trim(item), context));
    require(!out.empty(), "empty parameter list in '" + context + "'");
    return out;
}

FamilySpec parse_atom(const std::string& atom) {
    require(!atom.empty(), "empty graph spec");
    const auto colon = atom.find(':');
    if (colon != std::string::npos) {
        const std::string name = atom.substr(0, colon);
        const std::vector<int> params = parse_int_list(atom.substr(colon + 1), atom);
        static const std::vector<std::pair<std::string, Family>> names{
            {"path", Family::path},
            {"cycle", Family::cycle},
            {"complete", Family::complete},
            {"edgeless", Family::edgeless},
            {"butterfly", Family::butterfly},
            {"spider", Family::spider},
            {"tadpole", Family::tadpole},
            {"Lk", Family::hourglass_chain},
            {"kbip", Family::complete_bipartite},
            {"p5witness", Family::p5_witness},
            {"gprime", Family::gprime},
        };
        for (const auto& [n, f] : names) {
            if (n == name) return FamilySpec{f, params, {}};
        }
        throw InputError("unknown graph family '" + name + "'");
    }
    if (atom == "claw") return FamilySpec{Family::claw, {}, {}};
    if (atom == "hourglass") return FamilySpec{Family::hourglass, {}, {}};
    if (atom == "threeP1") return FamilySpec{Family::three_p1_witness, {}, {}};
    const char head = atom[0];
    const std::string rest = atom.substr(1);
    if (head == 'K' && rest.find(',') != std::string::npos) {
        return FamilySpec{Family::complete_bipartite, parse_int_list(rest, atom), {}};
    }
    if (all_digits(rest)) {
        const int value = to_int(rest, atom);
        switch (head) {
            case 'P': return FamilySpec{Family::path, {value}, {}};
            case 'C': return FamilySpec{Family::cycle, {value}, {}};
            case 'K': return FamilySpec{Family::complete, {value}, {}};
            case 'L': return FamilySpec{Family::hourglass_chain, {value}, {}};
            default: break;
        }
    }
    throw InputError("cannot parse graph spec '" + atom + "'");
}

FamilySpec parse_term(const std::string& raw) {
    std::string term = trim(raw);
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    if (digits == 0) return parse_atom(term);
    const int count = to_int(term.substr(0, digits), term);
    std::size_t start = digits;
    if (start < term.size() && term[start] == '*') ++start;
    require(start < term.size(), "multiplier without a graph in '" + term + "'");
    return FamilySpec{Family::copies, {count}, {parse_atom(term.substr(start))}};
}

}  // namespace

FamilySpec parse_family_spec(const std::string& text) {
    std::vector<FamilySpec> terms;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, '+')) terms.push_back(parse_term(item));
    require(!terms.empty(), "empty graph spec");
    require(trim(text).back() != '+', "graph spec ends with '+': " + text);
    if (terms.size() == 1) return terms.front();
    return FamilySpec{Family::disjoint_union, {}, std::move(terms)};
}

Graph parse_graph_spec(const std::string& text) { return from_spec(parse_family_spec(text)); }

std::vector<std::string> split_spec_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        require(!item.empty(), "empty entry in spec list '" + text + "'");
        // A leading integer that ends the item or precedes '+' continues the
        // previous item's parameter list ("tadpole:0,3+claw", "K3,4").
        const std::size_t digits = item.find_first_not_of("0123456789");
        const bool continues = digits != 0 && (digits == std::string::npos || item[digits] == '+');
        if (continues && !out.empty()) {
            out.back() += "," + item;
        } else {
            out.push_back(item);
        }
    }
    return out;
}

std::string to_string(const FamilySpec& spec) {
    std::ostringstream os;
    auto params = [&](const char* name) {
        os << name;
        for (std::size_t i = 0; i < spec.params.size(); ++i) os << (i ? ',' : ':') << spec.params[i];
    };
    switch (spec.family) {
        case Family::path: params("path"); break;
        case Family::cycle: params("cycle"); break;
        case Family::complete: params("complete"); break;
        case Family::edgeless: params("edgeless"); break;
        case Family::butterfly: params("butterfly"); break;
        case Family::spider: params("spider"); break;
        case Family::tadpole: params("tadpole"); break;
        case Family::hourglass: os << "hourglass"; break;
        case Family::hourglass_chain: params("Lk"); break;
        case Family::complete_bipartite: params("kbip"); break;
        case Family::p5_witness: params("p5witness"); break;
        case Family::three_p1_witness: os << "threeP1"; break;
        case Family::gprime: params("gprime"); break;
        case Family::claw: os << "claw"; break;
        case Family::copies: os << spec.params.at(0) << '*' << to_string(spec.parts.at(0)); break;
        case Family::disjoint_union:
            for (std::size_t i = 0; i < spec.parts.size(); ++i) os << (i ? "+" : "") << to_string(spec.parts[i]);
            break;
    }
    return os.str();
}

}  // namespace pocfvs
