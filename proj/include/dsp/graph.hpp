#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsp/errors.hpp"

namespace dsp {

enum class GraphKind { Directed, Undirected };

// One input line. For undirected graphs the arc stands for the whole edge;
// adjacency carries both orientations under the same edge id.
struct Arc {
    int tail;
    int head;
    int64_t weight;
};

struct AdjEntry {
    int to;
    int64_t weight;
    int edge;  // edge id, equal to the index into WeightedGraph::arcs
};

struct WeightedGraph {
    GraphKind kind = GraphKind::Directed;
    int n = 0;
    std::vector<Arc> arcs;
    std::vector<std::vector<AdjEntry>> out;  // per tail (both endpoints if undirected)
    std::vector<std::vector<AdjEntry>> in;   // per head (both endpoints if undirected)

    int m() const { return static_cast<int>(arcs.size()); }
    bool directed() const { return kind == GraphKind::Directed; }

    // Rebuilds out/in from arcs; validates ids, loops, duplicates, weights.
    void finalize();
};

struct Query {
    int s1, t1, s2, t2;
};

WeightedGraph parse_graph(std::istream& is);
WeightedGraph parse_graph(const std::string& text);
std::string serialize_graph(const WeightedGraph& g);

// Directed graph with two opposite arcs per undirected edge; the reverse of
// edge i gets id m + i.
WeightedGraph bidirect(const WeightedGraph& g);

// Uniform simple graph with exactly m edges; deterministic per seed.
WeightedGraph gen_random(int n, int m, int64_t wmin, int64_t wmax, GraphKind kind,
                         uint64_t seed);

// True iff a directed graph has no cycle.
bool is_dag(const WeightedGraph& g);

}  // namespace dsp
