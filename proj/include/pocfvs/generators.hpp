#pragma once

#include <array>
#include <string>
#include <vector>

#include "pocfvs/graph.hpp"

namespace pocfvs {

// Vertex numbering of every constructor is fixed; golden tests and traces
// depend on it.

/// P_k: vertices 0..k-1 in path order. k >= 1.
Graph path(int k);
/// C_r: vertices 0..r-1 in cyclic order. r >= 3.
Graph cycle(int r);
/// K_n. n >= 1.
Graph complete(int n);
/// n isolated vertices (n >= 0).
Graph edgeless(int n);

/// B_{i,j,k}: the cycles C_i and C_j joined by a path with k edges.
/// Vertices 0..i-1 form C_i with x = 0; i..i+k-2 are the interior bridge
/// vertices ordered from x; i+k-1.. form C_j with y = i+k-1.
/// Requires i, j >= 3 and k >= 1.
Graph butterfly(int i, int j, int k);

struct ButterflyHubs {
    int x;
    int y;
};
ButterflyHubs butterfly_hubs(int i, int j, int k);

/// T_k^{p,q}: center 0 joined to one end of each of P_k, P_p, P_q.
/// The P_k leg occupies 1..k (1 next to the center), then P_p, then P_q.
Graph spider(int k, int p, int q);

/// D_k^r: C_r on 0..r-1 and a pendant path r..r+k-1 with r adjacent to 0.
/// D_0^r is C_r.
Graph tadpole(int k, int r);

/// Two triangles sharing vertex 0: {0,1,2} and {0,3,4}.
Graph hourglass();

/// L_k: k hourglasses plus a vertex x = 0 adjacent to every degree-2 vertex
/// of every hourglass. Hourglass t (0-based) has center y_t = 1 + 5t and
/// non-center vertices 2 + 5t .. 5 + 5t.
Graph hourglass_chain(int k);
inline int hourglass_center(int t) { return 1 + 5 * t; }

/// K_{m,n}: side one is 0..m-1, side two is m..m+n-1.
Graph complete_bipartite(int m, int n);

/// P_4 on 0-1-2-3 plus two non-adjacent vertices 4, 5 joined to all of it.
Graph three_p1_witness();

/// K_3 on branch vertices 0, 1, 2 with every edge doubled and each of the
/// six resulting edges subdivided. Subdivision counts are ordered
/// (0-1, 0-1, 1-2, 1-2, 0-2, 0-2); every count must be >= 1.
Graph gprime(const std::array<int, 6>& subdivisions);
Graph gprime_uniform(int t);

/// sH: s disjoint copies of h (s >= 0).
Graph copies(int s, const Graph& h);

enum class Family {
    path,
    cycle,
    complete,
    edgeless,
    butterfly,
    spider,
    tadpole,
    hourglass,
    hourglass_chain,
    complete_bipartite,
    copies,
    disjoint_union,
    p5_witness,
    three_p1_witness,
    gprime,
    claw,
};

/// A parsed named family instance. `params` holds the integer parameters in
/// the order of the matching constructor; `parts` holds operands for
/// `copies` (one part, params = {s}) and `disjoint_union` (two or more parts).
struct FamilySpec {
    Family family = Family::path;
    std::vector<int> params;
    std::vector<FamilySpec> parts;
};

Graph from_spec(const FamilySpec& spec);

/// Parses the generator mini-language:
///   expr  := term ('+' term)*
///   term  := [count ['*']] atom
///   atom  := name [':' int (',' int)*] | P<k> | C<r> | K<n> | K<m>,<n>
///            | L<k> | claw | hourglass | threeP1
/// Names: path, cycle, complete, edgeless, butterfly, spider, tadpole,
/// hourglass, Lk, kbip, threeP1, p5witness, gprime (one uniform count or six).
/// Examples: "butterfly:5,9,4", "P4+P2", "2P3", "P5+2P1", "Lk:3", "K3,4".
FamilySpec parse_family_spec(const std::string& text);
Graph parse_graph_spec(const std::string& text);

/// Splits a comma-separated list of specs, re-attaching bare integers to the
/// preceding spec so "butterfly:3,3,1,P4" yields {"butterfly:3,3,1", "P4"}.
std::vector<std::string> split_spec_list(const std::string& text);

std::string to_string(const FamilySpec& spec);

}  // namespace pocfvs
