#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "dsp/graph.hpp"

namespace dsp {

constexpr int64_t kInfDist = std::numeric_limits<int64_t>::max() / 4;

// Exact all-pairs shortest distances. dist() returns kInfDist when unreachable.
struct DistanceMatrix {
    int n = 0;
    std::vector<int64_t> d;

    int64_t dist(int x, int y) const { return d[static_cast<size_t>(x) * n + y]; }
    bool reachable(int x, int y) const { return dist(x, y) < kInfDist; }
};

// Bellman-Ford potentials from a virtual source; throws NegativeCycle.
std::vector<int64_t> johnson_potentials(const WeightedGraph& g);

// Throws ZeroCycle (with a witness) iff the arcs of reduced weight zero
// contain a cycle. With valid potentials every zero-weight cycle is of this
// form, since reduced weights are non-negative.
void assert_no_zero_cycle(const WeightedGraph& g, const std::vector<int64_t>& potentials);

// Johnson's algorithm: potentials + one Dijkstra per source. Undirected
// graphs (positive weights) run plain Dijkstra per source.
DistanceMatrix apsp(const WeightedGraph& g);

// Single-source rows for instances too large for the full matrix.
std::vector<int64_t> sssp_from(const WeightedGraph& g, int s);  // dist(s, .)
std::vector<int64_t> sssp_to(const WeightedGraph& g, int t);    // dist(., t)

// Same, reusing already computed Bellman-Ford potentials.
std::vector<int64_t> sssp_from(const WeightedGraph& g, int s,
                               const std::vector<int64_t>& potentials);
std::vector<int64_t> sssp_to(const WeightedGraph& g, int t,
                             const std::vector<int64_t>& potentials);

// Linear-time rows for DAGs (weights may be negative). Throws NotADag.
std::vector<int64_t> dag_sssp_from(const WeightedGraph& g, int s);
std::vector<int64_t> dag_sssp_to(const WeightedGraph& g, int t);

// Membership in V(x,y) / E(x,y): the union of vertices / edges over all
// shortest x->y paths, decided by distance equalities.
bool vertex_on_sp(const DistanceMatrix& D, int x, int v, int y);
bool edge_on_sp(const DistanceMatrix& D, const WeightedGraph& g, int x, int arc, int y);

enum class DagDirection { OutOf, Into };

// Subgraph of arcs tight for a fixed source (or sink), oriented away from the
// root, with a topological order of the vertices it touches. Paths from the
// root correspond one-to-one to shortest paths in the host graph (reversed
// vertex order for the Into direction).
struct TightDag {
    int n = 0;
    int root = -1;
    DagDirection direction = DagDirection::OutOf;
    std::vector<std::vector<AdjEntry>> succ;  // oriented away from root
    std::vector<std::vector<AdjEntry>> pred;
    std::vector<int> topo;        // all n vertices, sources first
    std::vector<int> topo_index;  // position in topo per vertex
};

TightDag tight_dag(const WeightedGraph& g, const DistanceMatrix& D, int x,
                   DagDirection direction);

// Same construction from explicit distance rows (for large graphs).
TightDag tight_dag_from_row(const WeightedGraph& g, const std::vector<int64_t>& dist_row,
                            int x, DagDirection direction);

}  // namespace dsp
