#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsp/dsp2.hpp"
#include "dsp/graph.hpp"

namespace dsp {

// Vertex cap for the general directed solver; its tables grow as n^4.
constexpr int kMaxExactVertices = 64;

struct Min2Result {
    int k = 0;
    // present for the DAG and undirected solvers whenever k >= 1
    std::optional<std::pair<std::vector<int>, std::vector<int>>> paths;
};

// General positive-weight digraphs. Requires four distinct terminals, both
// pairs connected, and n <= kMaxExactVertices unless force_large. Returns the
// minimum shared-vertex count only; no witness.
Min2Result min2dsp_min_k(const WeightedGraph& g, const Query& q, uint64_t seed,
                         bool force_large = false, int trials = 1);

// DAGs (weights of any sign) and positive-weight undirected graphs. Both
// return an explicit witness pair when k >= 1.
Min2Result min2dsp_solve_dag(const WeightedGraph& g, const Query& q, uint64_t seed,
                             int trials = 1);
Min2Result min2dsp_solve_undirected(const WeightedGraph& g, const Query& q, uint64_t seed,
                                    int trials = 1);

}  // namespace dsp
