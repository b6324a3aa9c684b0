#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dsp/enum_poly.hpp"
#include "dsp/graph.hpp"
#include "dsp/shortest_paths.hpp"

namespace dsp::oracle {

constexpr int kDefaultPathCap = 10000;

// A shortest path as an explicit vertex sequence plus the edge ids used.
struct OPath {
    std::vector<int> verts;
    std::vector<int> edges;

    bool operator==(const OPath& o) const { return verts == o.verts; }
    bool operator<(const OPath& o) const { return verts < o.verts; }
};

using PathSet = std::vector<OPath>;

// All of Pi(x, y), sorted by vertex sequence. Empty when y is unreachable;
// the single empty path when x == y. Throws CapExceeded past the cap.
PathSet enum_paths(const WeightedGraph& g, const DistanceMatrix& D, int x, int y, int cap);

// Shared vertices of two paths.
int intersection_size(const OPath& p1, const OPath& p2);

// Internally vertex-disjoint under the shared-endpoint rule: no common vertex
// outside {x1,y1} n {x2,y2}. Identical paths qualify only when every vertex
// is an allowed endpoint (this matches the algebraic recurrences, which keep
// the pair (P, P) whenever P has no internal vertices).
bool internally_disjoint(const OPath& p1, const OPath& p2, const Query& q);

struct MinIntersection {
    int min_overall = -1;               // min |V(P1) n V(P2)|; -1 when no pair exists
    bool disjoint_exists = false;
    OPath witness1, witness2;           // lexicographically smallest optimal pair
    // minima restricted to pair classes (|W| >= 2 same order / reversed order)
    int min_agreeing = -1;
    int min_disagreeing = -1;
    bool singular_exists = false;       // some pair with |W| == 1
    bool all_classified = true;         // every |W| >= 2 pair is agreeing or disagreeing
};

// Exhaustive minimum over Pi(s1,t1) x Pi(s2,t2). Throws CapExceeded.
MinIntersection min_intersection(const WeightedGraph& g, const Query& q, int cap);

// Segment swap phi_{a,b}. Requires a strictly before b on both paths.
std::pair<OPath, OPath> swap_pair(const OPath& p1, const OPath& p2, int a, int b);

// All concordant pairs (a, b) for (P1, P2) with terminal pairs from q:
// a, b outside {s1,t1} n {s2,t2}, a <= b on both paths, prefixes up to a and
// suffixes from b internally vertex-disjoint.
std::vector<std::pair<int, int>> concordant_pairs(const OPath& p1, const OPath& p2,
                                                  const Query& q);

// Characteristic-2 polynomial: a set of monomials, each a sorted edge-id
// multiset. Addition toggles membership.
struct SymbolicPoly {
    std::set<std::vector<int>> monomials;

    void toggle(std::vector<int> mono);
    GF64 eval(const EdgeAssignment& za) const;
    bool is_zero() const { return monomials.empty(); }
};

SymbolicPoly symbolic_F(const WeightedGraph& g, const DistanceMatrix& D, int x, int y,
                        int cap);
SymbolicPoly symbolic_Fdisj(const WeightedGraph& g, const Query& q, int cap);

}  // namespace dsp::oracle
