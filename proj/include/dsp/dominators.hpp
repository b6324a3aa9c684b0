#pragma once

#include <limits>
#include <vector>

#include "dsp/shortest_paths.hpp"

namespace dsp {

constexpr int kInfDepth = std::numeric_limits<int>::max();

// Immediate-dominator forest of a rooted digraph. Vertices unreachable from
// the root carry depth kInfDepth and idom -1.
struct DominatorTree {
    int root = -1;
    std::vector<int> idom;   // -1 for the root and unreachable vertices
    std::vector<int> depth;  // root has depth 1

    bool reachable(int v) const { return depth[v] != kInfDepth; }
};

// Semi-NCA construction (Lengauer-Tarjan semidominators + NCA pass).
DominatorTree build_dominators(int n, const std::vector<std::vector<int>>& succ, int root);

DominatorTree build_dominators(const TightDag& dag, int root);

// Vertices lying on every s->t path of the DAG, in path order (these are
// exactly the dominators of t for root s). Throws Unreachable.
std::vector<int> cut_vertices(const TightDag& dag, int s, int t);

// delta(v, w) for all w: the number of vertices common to every shortest
// v->w path, endpoints included; kInfDepth when w is unreachable.
struct DeltaTable {
    int source = -1;
    std::vector<int> delta;
};

DeltaTable delta_from(const WeightedGraph& g, const DistanceMatrix& D, int v);

}  // namespace dsp
