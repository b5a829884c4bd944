#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pocfvs/graph.hpp"

namespace pocfvs {

/// One primitive region of the pair grid {(i, j) : i, j >= 3}. Every region
/// is symmetric under (i, j) -> (j, i).
struct PairRegion {
    enum class Kind {
        all,           // every pair
        row,           // a = p: i == p or j == p
        cells,         // a = p, b = q: (p, q) and (q, p)
        max_at_least,  // a = t: max(i, j) >= t
        min_max,       // a <= b: min(i, j) >= a and max(i, j) >= b
        row_tail,      // a = p, b = t: (i == p and j >= t) or (j == p and i >= t)
    };
    Kind kind = Kind::all;
    int a = 0;
    int b = 0;

    bool contains(int i, int j) const;
    std::string to_string() const;
    friend bool operator==(const PairRegion&, const PairRegion&) = default;
};

/// Finite union of primitive regions.
class PairSet {
public:
    PairSet() = default;
    static PairSet all();
    static PairSet row(int p);
    static PairSet cells(int p, int q);
    static PairSet max_at_least(int t);
    static PairSet min_max(int a, int b);
    static PairSet row_tail(int p, int t);

    const std::vector<PairRegion>& regions() const { return regions_; }
    bool empty() const { return regions_.empty(); }
    bool contains(int i, int j) const;
    PairSet& unite(const PairSet& other);

    /// Every region's membership test is constant in i (and in j) on
    /// [bound, inf), so the square [3, bound]^2 decides universality.
    int universality_bound() const;
    /// First uncovered pair in row-major order within [3, bound]^2.
    std::optional<std::pair<int, int>> first_uncovered() const;
    bool is_universal() const { return !first_uncovered().has_value(); }
    std::string to_string() const;

private:
    std::vector<PairRegion> regions_;
};

/// D_tail^cycle.
struct TadpoleShape {
    int tail = 0;
    int cycle = 3;
    friend bool operator==(const TadpoleShape&, const TadpoleShape&) = default;
};

/// T_handle^{leg1, leg2} with handle >= leg1 >= leg2 >= 1, so leg1 + leg2 is
/// the smallest possible arm sum among the three leg assignments.
struct SpiderShape {
    int handle = 1;
    int leg1 = 1;
    int leg2 = 1;
    int arm_threshold() const { return leg1 + leg2 + 2; }
    friend bool operator==(const SpiderShape&, const SpiderShape&) = default;
};

enum class ProfileKind {
    not_butterfly_subgraph,
    linear_forest,
    tadpole,             // LF + D
    two_tadpoles,        // LF + D + D'
    spider,              // LF + T
    two_spiders,         // LF + T + T'
    tadpole_and_spider,  // LF + D + T
};

std::string to_string(ProfileKind kind);

/// Decomposition of a graph into a linear forest plus at most two special
/// components, one per cycle-side of a butterfly.
struct StructureProfile {
    ProfileKind kind = ProfileKind::linear_forest;
    std::vector<int> path_orders;  // vertex counts of the path components, descending
    std::vector<TadpoleShape> tadpoles;
    std::vector<SpiderShape> spiders;

    /// Disjoint union of the parts; isomorphic to the profiled graph unless
    /// kind is not_butterfly_subgraph.
    Graph reassemble() const;
    std::string to_string() const;
};

/// Direct check: is h an induced subgraph of B_{i,j,N} with
/// N = 2|V(h)| + 1?
bool covers_bruteforce(const Graph& h, int i, int j);
/// Same, with the family-wide N = 2 max|V(H)| + 1 and any member.
bool covers_bruteforce_family(const std::vector<Graph>& family, int i, int j);

StructureProfile structure_profile(const Graph& h);
PairSet covered_pairs(const StructureProfile& profile);
PairSet covered_pairs(const Graph& h);

enum class Verdict { bounded, unbounded };

struct ClassificationResult {
    Verdict verdict = Verdict::unbounded;
    /// 1..4 for the single-graph tetrachotomy; unset otherwise.
    std::optional<int> tetrachotomy_class;
    /// 1..3 for the two-graph characterisation when bounded; unset otherwise.
    std::optional<int> condition;
    std::optional<std::pair<int, int>> uncovered_pair;
    PairSet covered;
    std::string witness;

    std::string to_string() const;
};

ClassificationResult family_covers_all(const std::vector<Graph>& family);

struct MustContainReport {
    bool applicable = false;  // false when the family is unbounded
    int double_tadpole_member = -1;  // index of a member inside some 2 D_l^3
    int double_spider_member = -1;   // index of a member inside some T + T'
};

/// For a bounded family, locates a member embedded in 2D_l^3 and a member
/// embedded in T_r^{p,q} + T_r^{p',q'}. Throws InternalError if either is
/// missing.
MustContainReport must_contain_check(const std::vector<Graph>& family);

/// Which of the three two-graph conditions holds (linear forest member;
/// D_l^3 with 2 T_r^{1,1}; 2 D_l^3 with T_r^{1,1}), cross-checked against
/// family_covers_all({h1, h2}).
ClassificationResult classify_pair(const Graph& h1, const Graph& h2);

/// Host parameter used to resolve "for some l" / "for some r" quantifiers:
/// any graph on n vertices inside D_l^3 (resp. T_r^{p,q}, ...) for some l
/// already embeds at l = 2n + 1.
int monotone_host_parameter(const Graph& h);

/// Tick grid of `set` for lo <= i, j <= hi.
std::string render_table(const PairSet& set, int lo, int hi);

}  // namespace pocfvs
