#include <algorithm>
#include <numeric>

#include "dsp/dominators.hpp"
#include "dsp/min2dsp.hpp"

namespace dsp {

namespace {

uint64_t trial_seed(uint64_t seed, int trial) {
    return seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial);
}

// One randomized evaluation round. Builds the full quadruple table of
// F_disj values, then raises the overlap budget k until the query tuple
// evaluates non-zero. Zero evaluations can understate nothing and overstate
// k only with the usual vanishing probability.
class BudgetSolver {
  public:
    BudgetSolver(const WeightedGraph& g, const DistanceMatrix& D, const Query& q,
                 uint64_t seed)
        : g_(g), D_(D), q_(q), n_(g.n), za_(sample_assignment(g.m(), seed)) {
        std::vector<int> all(n_);
        std::iota(all.begin(), all.end(), 0);
        F_ = eval_F(g_, D_, za_, all);
        delta_.reserve(n_);
        for (int v = 0; v < n_; ++v) delta_.push_back(delta_from(g_, D_, v));
        build_fd4();
    }

    // smallest k >= 1 with a non-zero evaluation, or -1
    int min_k() {
        // fk holds F_disj restricted to overlap budget k for the tuples
        // (p, t1, s2, r); level 0 is plain F_disj
        std::vector<std::vector<GF64>> fk(1);
        fk[0].assign(static_cast<size_t>(n_) * n_, GF64::zero());
        for (int p = 0; p < n_; ++p)
            for (int r = 0; r < n_; ++r)
                fk[0][static_cast<size_t>(p) * n_ + r] = fd4_at(p, q_.t1, q_.s2, r);

        for (int k = 1; k <= n_; ++k) {
            fk.emplace_back(static_cast<size_t>(n_) * n_, GF64::zero());
            for (int p = 0; p < n_; ++p)
                for (int r = 0; r < n_; ++r)
                    fk[k][static_cast<size_t>(p) * n_ + r] = budget_value(fk, k, p, r);
            if (!fk[k][static_cast<size_t>(q_.s1) * n_ + q_.t2].is_zero()) return k;
        }
        return -1;
    }

  private:
    const WeightedGraph& g_;
    const DistanceMatrix& D_;
    const Query& q_;
    int n_;
    EdgeAssignment za_;
    FBar F_;
    std::vector<DeltaTable> delta_;
    std::vector<GF64> fd4_;

    size_t idx(int x1, int y1, int x2, int y2) const {
        return ((static_cast<size_t>(x1) * n_ + y1) * n_ + x2) * n_ + y2;
    }
    GF64 fd4_at(int x1, int y1, int x2, int y2) const { return fd4_[idx(x1, y1, x2, y2)]; }

    bool doubly_tight_edge(int edge, int x1, int y1, int x2, int y2) const {
        return edge_on_sp(D_, g_, x1, edge, y1) && edge_on_sp(D_, g_, x2, edge, y2);
    }

    // F_disj for every quadruple, in increasing order of the distance sum so
    // each value only consumes strictly smaller entries
    void build_fd4() {
        fd4_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, GF64::zero());
        std::vector<int64_t> pair_dist(static_cast<size_t>(n_) * n_);
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) pair_dist[static_cast<size_t>(x) * n_ + y] = D_.dist(x, y);

        std::vector<uint32_t> order;
        order.reserve(fd4_.size());
        for (uint32_t p1 = 0; p1 < static_cast<uint32_t>(n_) * n_; ++p1) {
            if (pair_dist[p1] >= kInfDist) continue;
            for (uint32_t p2 = 0; p2 < static_cast<uint32_t>(n_) * n_; ++p2) {
                if (pair_dist[p2] >= kInfDist) continue;
                order.push_back(p1 * static_cast<uint32_t>(n_) * n_ + p2);
            }
        }
        auto sum_of = [&](uint32_t id) {
            uint32_t p2 = id % (static_cast<uint32_t>(n_) * n_);
            uint32_t p1 = id / (static_cast<uint32_t>(n_) * n_);
            return pair_dist[p1] + pair_dist[p2];
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](uint32_t a, uint32_t b) { return sum_of(a) < sum_of(b); });

        for (uint32_t id : order) {
            int y2 = static_cast<int>(id % n_);
            int x2 = static_cast<int>(id / n_ % n_);
            int y1 = static_cast<int>(id / n_ / n_ % n_);
            int x1 = static_cast<int>(id / n_ / n_ / n_);
            fd4_[id] = fdisj_value(x1, y1, x2, y2);
        }
    }

    GF64 fdisj_value(int x1, int y1, int x2, int y2) {
        if (x1 == y1 && x2 == y2) return GF64::one();
        if (x1 == y1) return F_.at(x2, y2);
        if (x2 == y2) return F_.at(x1, y1);
        GF64 val = F_.at(x1, y1) * F_.at(x2, y2);
        for (int v = 0; v < n_; ++v) {
            if ((v == x1 || v == y1) && (v == x2 || v == y2)) continue;
            if (!vertex_on_sp(D_, x1, v, y1) || !vertex_on_sp(D_, x2, v, y2)) continue;
            GF64 inner = F_.at(x2, v) * fd4_at(x1, v, v, y2);
            for (const AdjEntry& e : g_.in[v]) {
                // with a shared source, pairs entering v along a common first
                // edge are disjoint up to v and must not be cancelled
                if (x1 == x2 && e.to == x1) continue;
                if (!doubly_tight_edge(e.edge, x1, y1, x2, y2)) continue;
                GF64 z = za_[e.edge];
                inner += z * z * F_.at(x2, e.to) * fd4_at(x1, e.to, v, y2);
            }
            val += inner * F_.at(v, y1);  // subtraction equals addition
        }
        return val;
    }

    // budget-limited value for the tuple (p, t1, s2, r): the budget-zero pairs
    // plus one term per first concordant meeting (v, w)
    GF64 budget_value(const std::vector<std::vector<GF64>>& fk, int k, int p, int r) {
        int y1 = q_.t1, x2 = q_.s2;
        if (p == y1 && x2 == r) return GF64::one();
        if (p == y1) return F_.at(x2, r);
        if (x2 == r) return F_.at(p, y1);
        if (!D_.reachable(p, y1) || !D_.reachable(x2, r)) return GF64::zero();

        auto fk_at = [&](int kk, int a, int b) {
            return fk[kk][static_cast<size_t>(a) * n_ + b];
        };
        auto in_excl = [&](int v) { return (v == p || v == y1) && (v == x2 || v == r); };

        GF64 val = fd4_at(p, y1, x2, r);
        for (int v = 0; v < n_; ++v) {
            if (in_excl(v)) continue;
            if (!vertex_on_sp(D_, p, v, y1) || !vertex_on_sp(D_, x2, v, r)) continue;
            for (int w = 0; w < n_; ++w) {
                if (in_excl(w)) continue;
                if (!D_.reachable(v, w)) continue;
                if (!vertex_on_sp(D_, p, w, y1) || !vertex_on_sp(D_, x2, w, r)) continue;
                if (D_.dist(p, v) + D_.dist(v, w) != D_.dist(p, w)) continue;
                if (D_.dist(x2, v) + D_.dist(v, w) != D_.dist(x2, w)) continue;
                int dd = delta_[v].delta[w];
                if (dd == kInfDepth || k - dd < 0) continue;
                int kk = k - dd;

                GF64 term = fd4_at(p, v, w, r) * fk_at(kk, w, v);
                for (const AdjEntry& ea : g_.in[v]) {
                    // shared source: a common first edge into v is legitimate
                    if (p == x2 && ea.to == p) continue;
                    if (!doubly_tight_edge(ea.edge, p, y1, x2, r)) continue;
                    GF64 za = za_[ea.edge];
                    term += za * za * fd4_at(p, ea.to, w, r) * fk_at(kk, w, ea.to);
                }
                for (const AdjEntry& eb : g_.out[w]) {
                    // shared sink: a common last edge out of w is legitimate
                    if (y1 == r && eb.to == r) continue;
                    if (!doubly_tight_edge(eb.edge, p, y1, x2, r)) continue;
                    GF64 zb = za_[eb.edge];
                    term += zb * zb * fd4_at(p, v, eb.to, r) * fk_at(kk, eb.to, v);
                }
                for (const AdjEntry& ea : g_.in[v]) {
                    if (p == x2 && ea.to == p) continue;
                    if (!doubly_tight_edge(ea.edge, p, y1, x2, r)) continue;
                    for (const AdjEntry& eb : g_.out[w]) {
                        if (y1 == r && eb.to == r) continue;
                        if (!doubly_tight_edge(eb.edge, p, y1, x2, r)) continue;
                        GF64 zz = za_[ea.edge] * za_[eb.edge];
                        term += zz * zz * fd4_at(p, ea.to, eb.to, r) * fk_at(kk, eb.to, ea.to);
                    }
                }
                GF64 fvw = F_.at(v, w);
                val += fvw * fvw * term;
            }
        }
        return val;
    }
};

}  // namespace

Min2Result min2dsp_min_k(const WeightedGraph& g, const Query& q, uint64_t seed,
                         bool force_large, int trials) {
    if (!g.directed()) throw KindMismatch("min-k solver expects a directed graph");
    for (const Arc& a : g.arcs)
        if (a.weight <= 0) throw NonPositiveWeight("min-k solver requires positive weights");
    int terms[4] = {q.s1, q.t1, q.s2, q.t2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (terms[i] == terms[j])
                throw TerminalsNotDistinct("the four terminals must be pairwise distinct");
    if (g.n > kMaxExactVertices && !force_large)
        throw InstanceTooLarge("vertex count exceeds the exact-solver cap");

    if (dsp2_decide(g, q, seed, trials)) return {0, std::nullopt};

    DistanceMatrix D = apsp(g);
    if (!D.reachable(q.s1, q.t1))
        throw UnreachableTerminal("t1 is unreachable from s1");
    if (!D.reachable(q.s2, q.t2))
        throw UnreachableTerminal("t2 is unreachable from s2");

    int best = -1;
    for (int t = 0; t < std::max(trials, 1); ++t) {
        BudgetSolver solver(g, D, q, trial_seed(seed, t));
        int k = solver.min_k();
        if (k != -1 && (best == -1 || k < best)) best = k;
    }
    if (best == -1)
        throw NoIntersectingPair("no overlap budget produced a non-zero evaluation");
    return {best, std::nullopt};
}

}  // namespace dsp
