#pragma once

#include <array>
#include <utility>
#include <vector>

#include "dsp/graph.hpp"

namespace dsp::detail {

// Cheapest forced meeting over one orientation class of doubly tight edges.
// alpha is the minimum shared-vertex count over path pairs routed through a
// single vertex, -1 when no vertex qualifies; vstar is the smallest vertex
// attaining it.
struct MeetResult {
    int alpha = -1;
    int vstar = -1;
};

// All arc lists are oriented along the respective pair's shortest paths.
// comp holds every arc tight for both pairs and defines the components that
// confine any pair's intersection; common holds the arcs of one orientation
// class and forms the in-component routing structure. tight1/tight2 list all
// arcs tight for the respective pair, on_both flags the vertices lying on
// shortest paths of both pairs. When cands is given it receives every
// qualifying (vertex, alpha) entry, not just the best one.
MeetResult min_meeting(int n, const Query& q, const std::vector<std::pair<int, int>>& comp,
                       const std::vector<std::pair<int, int>>& common,
                       const std::vector<std::pair<int, int>>& tight1,
                       const std::vector<std::pair<int, int>>& tight2,
                       const std::vector<char>& on_both,
                       std::vector<std::pair<int, int>>* cands = nullptr);

// Two paths root -> a and root -> b inside the DAG given by succ, meeting
// exactly at the vertices every such pair must share (the dominator chain of
// a joint dummy sink). cuts counts those shared vertices, root included.
struct LegPair {
    std::vector<int> leg1;  // root ... a
    std::vector<int> leg2;  // root ... b
    int cuts = 0;
};

LegPair tight_legs(int n, const std::vector<std::vector<int>>& succ, int root, int a, int b);

// Witness pair through a meeting vertex: in-legs (walked backwards along
// succ_in) glued to out-legs. Returns the s1 -> t1 and s2 -> t2 sequences.
std::pair<std::vector<int>, std::vector<int>> stitch_through(
    const std::vector<std::vector<int>>& succ_out, const std::vector<std::vector<int>>& succ_in,
    int n, int vstar, int s1, int t1, int s2, int t2);

// Four root -> target paths in the DAG given by succ that pairwise share only
// the root. Throws FlowInfeasible when fewer than four units fit.
std::array<std::vector<int>, 4> disjoint_legs(int n, const std::vector<std::vector<int>>& succ,
                                              int root, const std::array<int, 4>& targets);

}  // namespace dsp::detail
