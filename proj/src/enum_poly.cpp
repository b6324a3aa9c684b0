#include "dsp/enum_poly.hpp"

#include <random>

namespace dsp {

EdgeAssignment sample_assignment(int edge_count, uint64_t seed) {
    EdgeAssignment za;
    za.seed = seed;
    za.z.reserve(edge_count);
    std::mt19937_64 rng(seed);
    for (int i = 0; i < edge_count; ++i) za.z.push_back(GF64::sample(rng));
    return za;
}

std::vector<GF64> eval_F_row(const WeightedGraph& g, const std::vector<int64_t>& dist_row,
                             const EdgeAssignment& za, int x) {
    TightDag dag = tight_dag_from_row(g, dist_row, x, DagDirection::OutOf);
    std::vector<GF64> f(g.n, GF64::zero());
    f[x] = GF64::one();
    for (int v : dag.topo) {
        if (f[v].is_zero()) continue;
        for (const AdjEntry& e : dag.succ[v]) f[e.to] += f[v] * za[e.edge];
    }
    return f;
}

std::vector<GF64> eval_F_col(const WeightedGraph& g, const std::vector<int64_t>& dist_col,
                             const EdgeAssignment& za, int y) {
    TightDag dag = tight_dag_from_row(g, dist_col, y, DagDirection::Into);
    std::vector<GF64> f(g.n, GF64::zero());
    f[y] = GF64::one();
    for (int v : dag.topo) {
        if (f[v].is_zero()) continue;
        for (const AdjEntry& e : dag.succ[v]) f[e.to] += f[v] * za[e.edge];
    }
    return f;
}

FBar eval_F(const WeightedGraph& g, const DistanceMatrix& D, const EdgeAssignment& za,
            const std::vector<int>& sources) {
    FBar fb(g.n, sources);
    std::vector<int64_t> row(g.n);
    for (int x : sources) {
        for (int v = 0; v < g.n; ++v) row[v] = D.dist(x, v);
        fb.row(x) = eval_F_row(g, row, za, x);
    }
    return fb;
}

FBar eval_F_rev(const WeightedGraph& g, const DistanceMatrix& D, const EdgeAssignment& za,
                const std::vector<int>& sinks) {
    FBar fb(g.n, sinks);
    std::vector<int64_t> col(g.n);
    for (int y : sinks) {
        for (int v = 0; v < g.n; ++v) col[v] = D.dist(v, y);
        fb.row(y) = eval_F_col(g, col, za, y);
    }
    return fb;
}

}  // namespace dsp
