#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dsp/graph.hpp"

namespace dsp {

// Total weight of the vertex sequence, or nullopt when some consecutive pair
// is not connected by an arc (either orientation for undirected graphs).
std::optional<int64_t> walk_weight(const WeightedGraph& g, const std::vector<int>& verts);

bool is_simple_seq(const std::vector<int>& verts);

int shared_vertex_count(const std::vector<int>& a, const std::vector<int>& b);

// Shared vertices are all endpoints common to both terminal pairs.
bool internally_disjoint_seqs(const std::vector<int>& p1, const std::vector<int>& p2,
                              const Query& q);

// Full witness check: endpoints match the query, both sequences are simple
// paths in g of the expected shortest-path weights, and (when expected_k >= 0)
// they share exactly expected_k vertices.
bool valid_pair(const WeightedGraph& g, const Query& q, const std::vector<int>& p1,
                const std::vector<int>& p2, int64_t d1, int64_t d2, int expected_k = -1);

}  // namespace dsp
