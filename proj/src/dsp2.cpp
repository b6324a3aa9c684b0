#include "dsp/dsp2.hpp"

#include <algorithm>
#include <numeric>

namespace dsp {

namespace {

// Dynamic program over the tuple list: entries (s1,v,v,t2) per vertex and
// (s1,a,v,t2) per tight arc (a,v), keyed by the topological index of the
// second component in the tight DAG rooted at s1, followed by the query
// tuple. Every value a tuple consumes sits at a strictly earlier key, or is
// the same-key vertex entry.
struct Engine {
    const WeightedGraph& g;
    const DistanceMatrix& D;
    const EdgeAssignment& za;
    int s1, t2;
    bool grouped;

    FBar F;
    TightDag H;
    std::vector<GF64> fd_vtx;   // F_disj(s1, v, v, t2)
    std::vector<GF64> fd_arc;   // F_disj(s1, a, v, t2) per tight arc's edge id
    std::vector<GF64> s_cache;  // grouped inner sums, keyed x2 * n + u
    std::vector<uint8_t> s_done;

    Engine(const WeightedGraph& g_, const DistanceMatrix& D_, const EdgeAssignment& za_,
           int s1_, int t2_, bool grouped_)
        : g(g_), D(D_), za(za_), s1(s1_), t2(t2_), grouped(grouped_) {
        std::vector<int> all(g.n);
        std::iota(all.begin(), all.end(), 0);
        F = eval_F(g, D, za, all);
        H = tight_dag(g, D, s1, DagDirection::OutOf);
        fd_vtx.assign(g.n, GF64::zero());
        fd_arc.assign(g.m(), GF64::zero());
        if (grouped) {
            s_cache.assign(static_cast<size_t>(g.n) * g.n, GF64::zero());
            s_done.assign(static_cast<size_t>(g.n) * g.n, 0);
        }
        for (int a : H.topo) {
            fd_vtx[a] = tuple_value(a, a);
            for (const AdjEntry& e : H.succ[a]) fd_arc[e.edge] = tuple_value(a, e.to);
        }
    }

    // grouped inner sum over tight in-arcs of u that also lie on a shortest
    // x2 -> t2 path; independent of the tuple that consumes it
    GF64 inner_sum(int x2, int u) {
        size_t key = static_cast<size_t>(x2) * g.n + u;
        if (!s_done[key]) {
            GF64 s = GF64::zero();
            for (const AdjEntry& e : H.pred[u]) {
                // with a shared source the pair may enter u straight from it
                // along a common first edge; such pairs are legitimately
                // disjoint up to u, so the arc term must not cancel them
                if (x2 == s1 && e.to == s1) continue;
                if (!edge_on_sp(D, g, x2, e.edge, t2)) continue;
                GF64 z = za[e.edge];
                s += z * z * F.at(x2, e.to) * fd_arc[e.edge];
            }
            s_cache[key] = s;
            s_done[key] = 1;
        }
        return s_cache[key];
    }

    // F_disj(s1, y1, x2, t2)
    GF64 tuple_value(int y1, int x2) {
        if (y1 == s1 && x2 == t2) return GF64::one();
        if (y1 == s1) return F.at(x2, t2);
        if (x2 == t2) return F.at(s1, y1);
        GF64 val = F.at(s1, y1) * F.at(x2, t2);
        for (int w = 0; w < g.n; ++w) {
            if ((w == s1 || w == y1) && (w == x2 || w == t2)) continue;
            if (!vertex_on_sp(D, s1, w, y1) || !vertex_on_sp(D, x2, w, t2)) continue;
            GF64 inner;
            if (grouped) {
                inner = F.at(x2, w) * fd_vtx[w] + inner_sum(x2, w);
            } else {
                inner = F.at(x2, w) * fd_vtx[w];
                for (const AdjEntry& e : H.pred[w]) {
                    if (x2 == s1 && e.to == s1) continue;
                    if (!edge_on_sp(D, g, s1, e.edge, y1)) continue;
                    if (!edge_on_sp(D, g, x2, e.edge, t2)) continue;
                    GF64 z = za[e.edge];
                    inner += z * z * F.at(x2, e.to) * fd_arc[e.edge];
                }
            }
            val += inner * F.at(w, y1);  // subtraction equals addition
        }
        return val;
    }
};

WeightedGraph induce_alive(const WeightedGraph& g, const std::vector<char>& alive) {
    WeightedGraph sub;
    sub.kind = g.kind;
    sub.n = g.n;
    for (const Arc& a : g.arcs)
        if (alive[a.tail] && alive[a.head]) sub.arcs.push_back(a);
    sub.finalize();
    return sub;
}

uint64_t trial_seed(uint64_t seed, int trial) {
    return seed + 0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(trial);
}

}  // namespace

GF64 dsp2_fdisj_value(const WeightedGraph& g, const DistanceMatrix& D,
                      const EdgeAssignment& za, const Query& q, bool grouped) {
    Engine eng(g, D, za, q.s1, q.t2, grouped);
    return eng.tuple_value(q.t1, q.s2);
}

Restriction restrict_to_relevant(const WeightedGraph& g, const Query& q,
                                 const std::vector<int64_t>& from_s1,
                                 const std::vector<int64_t>& to_t1,
                                 const std::vector<int64_t>& from_s2,
                                 const std::vector<int64_t>& to_t2) {
    int64_t d1 = from_s1[q.t1], d2 = from_s2[q.t2];
    auto tight = [](const std::vector<int64_t>& fr, const std::vector<int64_t>& to,
                    const Arc& a, int64_t d) {
        return d < kInfDist && fr[a.tail] < kInfDist && to[a.head] < kInfDist &&
               fr[a.tail] + a.weight + to[a.head] == d;
    };
    std::vector<char> keep_arc(g.arcs.size(), 0), keep_v(g.n, 0);
    keep_v[q.s1] = keep_v[q.t1] = keep_v[q.s2] = keep_v[q.t2] = 1;
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        const Arc& a = g.arcs[i];
        if (tight(from_s1, to_t1, a, d1) || tight(from_s2, to_t2, a, d2)) {
            keep_arc[i] = 1;
            keep_v[a.tail] = keep_v[a.head] = 1;
        }
    }
    Restriction r;
    std::vector<int> to_sub(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (keep_v[v]) {
            to_sub[v] = static_cast<int>(r.to_full.size());
            r.to_full.push_back(v);
        }
    r.sub.kind = g.kind;
    r.sub.n = static_cast<int>(r.to_full.size());
    for (size_t i = 0; i < g.arcs.size(); ++i)
        if (keep_arc[i])
            r.sub.arcs.push_back({to_sub[g.arcs[i].tail], to_sub[g.arcs[i].head],
                                  g.arcs[i].weight});
    r.sub.finalize();
    r.q = {to_sub[q.s1], to_sub[q.t1], to_sub[q.s2], to_sub[q.t2]};
    return r;
}

bool dsp2_decide_on_rows(const WeightedGraph& g, const Query& q,
                         const std::vector<int64_t>& from_s1,
                         const std::vector<int64_t>& to_t1,
                         const std::vector<int64_t>& from_s2,
                         const std::vector<int64_t>& to_t2, uint64_t seed, int trials) {
    if (from_s1[q.t1] >= kInfDist)
        throw UnreachableTerminal("t1 is unreachable from s1");
    if (from_s2[q.t2] >= kInfDist)
        throw UnreachableTerminal("t2 is unreachable from s2");
    Restriction r = restrict_to_relevant(g, q, from_s1, to_t1, from_s2, to_t2);
    DistanceMatrix D = apsp(r.sub);
    for (int t = 0; t < std::max(trials, 1); ++t) {
        EdgeAssignment za = sample_assignment(r.sub.m(), trial_seed(seed, t));
        if (!dsp2_fdisj_value(r.sub, D, za, r.q).is_zero()) return true;
    }
    return false;
}

bool dsp2_decide(const WeightedGraph& g, const Query& q, uint64_t seed, int trials) {
    if (!g.directed()) throw KindMismatch("2-DSP decision expects a directed graph");
    std::vector<int64_t> h = johnson_potentials(g);
    assert_no_zero_cycle(g, h);
    std::vector<int64_t> d1 = sssp_from(g, q.s1, h), r1 = sssp_to(g, q.t1, h);
    std::vector<int64_t> d2 = sssp_from(g, q.s2, h), r2 = sssp_to(g, q.t2, h);
    return dsp2_decide_on_rows(g, q, d1, r1, d2, r2, seed, trials);
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> dsp2_report(
    const WeightedGraph& g, const Query& q, uint64_t seed) {
    if (!dsp2_decide(g, q, seed)) return std::nullopt;

    std::vector<int64_t> h = johnson_potentials(g);
    int64_t d1 = sssp_from(g, q.s1, h)[q.t1];
    int64_t d2 = sssp_from(g, q.s2, h)[q.t2];

    std::vector<char> alive(g.n, 1);
    std::vector<int> p2{q.s2};
    int64_t prefw = 0;
    int cur = q.s2;
    uint64_t step_seed = seed;

    while (cur != q.t2) {
        // the current source leaves the graph; the remainder of P2 and all of
        // P1 must avoid it (unless it is a shared terminal)
        if (cur != q.s1 && cur != q.t1) alive[cur] = 0;
        WeightedGraph sub = induce_alive(g, alive);
        DistanceMatrix Ds = apsp(sub);
        if (Ds.dist(q.s1, q.t1) != d1)
            throw ReportingFailed("advancing P2 broke the P1 distance");
        EdgeAssignment za = sample_assignment(sub.m(), ++step_seed);
        Engine eng(sub, Ds, za, q.s1, q.t2, true);

        std::vector<std::pair<int, int64_t>> cands;
        for (const AdjEntry& e : g.out[cur])
            if (alive[e.to]) cands.emplace_back(e.to, e.weight);
        std::sort(cands.begin(), cands.end());

        int chosen = -1;
        int64_t chosen_w = 0;
        for (auto [w, wt] : cands) {
            // a vertex P1 must use may not appear inside P2
            if ((w == q.s1 || w == q.t1) && w != q.s2 && w != q.t2) continue;
            if (Ds.dist(w, q.t2) >= kInfDist) continue;
            if (prefw + wt + Ds.dist(w, q.t2) != d2) continue;
            if (eng.tuple_value(q.t1, w).is_zero()) continue;
            chosen = w;
            chosen_w = wt;
            break;
        }
        if (chosen < 0) throw ReportingFailed("no extendable tight neighbor from P2");
        prefw += chosen_w;
        p2.push_back(chosen);
        cur = chosen;
    }

    // delete the interior of P2 (and its endpoints unless P1 may share them),
    // then recover P1 by Bellman-Ford on what is left
    for (int v : p2)
        if (v != q.s1 && v != q.t1) alive[v] = 0;
    WeightedGraph sub = induce_alive(g, alive);
    std::vector<int64_t> dist(sub.n, kInfDist);
    std::vector<int> parent(sub.n, -1);
    dist[q.s1] = 0;
    for (int round = 0; round < sub.n; ++round) {
        bool changed = false;
        for (const Arc& a : sub.arcs) {
            if (dist[a.tail] < kInfDist && dist[a.tail] + a.weight < dist[a.head]) {
                dist[a.head] = dist[a.tail] + a.weight;
                parent[a.head] = a.tail;
                changed = true;
            }
        }
        if (!changed) break;
    }
    if (dist[q.t1] != d1) throw ReportingFailed("no tight P1 avoids the chosen P2");
    std::vector<int> p1;
    for (int v = q.t1; v != -1; v = parent[v]) p1.push_back(v);
    std::reverse(p1.begin(), p1.end());
    if (p1.front() != q.s1) throw ReportingFailed("P1 reconstruction lost its source");
    return std::make_pair(p1, p2);
}

}  // namespace dsp
