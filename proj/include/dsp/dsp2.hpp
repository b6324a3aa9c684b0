#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dsp/enum_poly.hpp"
#include "dsp/graph.hpp"
#include "dsp/shortest_paths.hpp"

namespace dsp {

// Evaluated F_disj(s1, t1, s2, t2): the enumerating polynomial of internally
// vertex-disjoint shortest-path pairs, at the given random assignment.
// The naive variant expands every inner arc sum literally instead of the
// grouped per-vertex factoring; both must agree entrywise.
GF64 dsp2_fdisj_value(const WeightedGraph& g, const DistanceMatrix& D,
                      const EdgeAssignment& za, const Query& q, bool grouped = true);

// Randomized decision for 2-DSP on a weighted digraph with no negative or
// zero cycles. False is exact; true fails with probability <= 2n/2^64 per
// trial. Extra trials rerun with derived seeds and OR the verdicts.
bool dsp2_decide(const WeightedGraph& g, const Query& q, uint64_t seed, int trials = 1);

// Explicit internally disjoint pair, or nullopt when dsp2_decide is false.
// Throws ReportingFailed when a random evaluation misleads the construction
// (retry with a fresh seed).
std::optional<std::pair<std::vector<int>, std::vector<int>>> dsp2_report(
    const WeightedGraph& g, const Query& q, uint64_t seed);

// Subgraph of the arcs lying on a shortest path of either terminal pair,
// compacted to the touched vertices. Dropping the other arcs changes no
// quantity the decision procedure reads.
struct Restriction {
    WeightedGraph sub;
    Query q;                  // terminals remapped into sub
    std::vector<int> to_full; // sub vertex id -> original id
};

Restriction restrict_to_relevant(const WeightedGraph& g, const Query& q,
                                 const std::vector<int64_t>& from_s1,
                                 const std::vector<int64_t>& to_t1,
                                 const std::vector<int64_t>& from_s2,
                                 const std::vector<int64_t>& to_t2);

// Decision on precomputed full-graph distance rows, skipping the cycle
// validation (for callers that already guarantee no negative/zero cycles,
// e.g. DAGs and bidirected positive graphs).
bool dsp2_decide_on_rows(const WeightedGraph& g, const Query& q,
                         const std::vector<int64_t>& from_s1,
                         const std::vector<int64_t>& to_t1,
                         const std::vector<int64_t>& from_s2,
                         const std::vector<int64_t>& to_t2, uint64_t seed,
                         int trials = 1);

}  // namespace dsp
