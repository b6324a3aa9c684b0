#pragma once

#include <cstdint>
#include <vector>

#include "dsp/gf64.hpp"
#include "dsp/shortest_paths.hpp"

namespace dsp {

// Random evaluation point: one field element per edge id. Both orientations
// of an undirected edge read the same value.
struct EdgeAssignment {
    uint64_t seed = 0;
    std::vector<GF64> z;

    GF64 operator[](int edge) const { return z[edge]; }
};

EdgeAssignment sample_assignment(int edge_count, uint64_t seed);

// Evaluated F(x, y): the sum over all shortest x->y paths of the product of
// edge values along the path. F(x, x) = 1, unreachable entries are 0.
class FBar {
  public:
    FBar() = default;
    FBar(int n, const std::vector<int>& keys) : n_(n), row_of_(n, -1) {
        for (int k : keys) {
            if (row_of_[k] != -1) continue;
            row_of_[k] = static_cast<int>(rows_.size());
            rows_.emplace_back(n, GF64::zero());
        }
    }

    bool has(int key) const { return row_of_[key] != -1; }
    GF64 at(int key, int other) const { return rows_[row_of_[key]][other]; }
    std::vector<GF64>& row(int key) { return rows_[row_of_[key]]; }
    const std::vector<GF64>& row(int key) const { return rows_[row_of_[key]]; }

  private:
    int n_ = 0;
    std::vector<int> row_of_;
    std::vector<std::vector<GF64>> rows_;
};

// Rows F(x, .) for each x in sources, via the tight-DAG recurrence
// F(x, y) = sum over tight arcs (a, y) of F(x, a) * z_ay.
FBar eval_F(const WeightedGraph& g, const DistanceMatrix& D, const EdgeAssignment& za,
            const std::vector<int>& sources);

// Columns F(., y) for each y in sinks; at(y, x) holds F(x, y).
FBar eval_F_rev(const WeightedGraph& g, const DistanceMatrix& D, const EdgeAssignment& za,
                const std::vector<int>& sinks);

// Row/column variants that avoid the full distance matrix.
std::vector<GF64> eval_F_row(const WeightedGraph& g, const std::vector<int64_t>& dist_row,
                             const EdgeAssignment& za, int x);
std::vector<GF64> eval_F_col(const WeightedGraph& g, const std::vector<int64_t>& dist_col,
                             const EdgeAssignment& za, int y);

}  // namespace dsp
