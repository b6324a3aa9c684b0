#include "dsp/meeting.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "dsp/dominators.hpp"
#include "dsp/errors.hpp"

namespace dsp::detail {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// true for vertices whose dominator chain passes through a non-root dummy
std::vector<char> dummy_tainted(const DominatorTree& t, int first_dummy, int total) {
    std::vector<int> order;
    for (int v = 0; v < total; ++v)
        if (t.reachable(v)) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return t.depth[a] < t.depth[b]; });
    std::vector<char> bad(total, 0);
    for (int v : order) {
        bool own = v >= first_dummy && v != t.root;
        bad[v] = own || (t.idom[v] != -1 && bad[t.idom[v]]);
    }
    return bad;
}

// residual network with unit-ish integer capacities
struct FlowNet {
    struct Edge {
        int to;
        int cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add(int u, int v, int cap) {
        adj[u].push_back(static_cast<int>(edges.size()));
        edges.push_back({v, cap});
        adj[v].push_back(static_cast<int>(edges.size()));
        edges.push_back({u, 0});
    }

    // pushes one unit along a BFS path, false when the sink is unreachable
    bool augment(int s, int t) {
        std::vector<int> via(adj.size(), -1);
        std::vector<int> queue{s};
        std::vector<char> seen(adj.size(), 0);
        seen[s] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            if (u == t) break;
            for (int id : adj[u]) {
                const Edge& e = edges[id];
                if (e.cap <= 0 || seen[e.to]) continue;
                seen[e.to] = 1;
                via[e.to] = id;
                queue.push_back(e.to);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            int id = via[v];
            edges[id].cap -= 1;
            edges[id ^ 1].cap += 1;
            v = edges[id ^ 1].to;
        }
        return true;
    }
};

// two internally disjoint tight segments from c to c2 inside one slab of the
// dominator chain; host vertex sequences include both endpoints
std::array<std::vector<int>, 2> gap_segments(const std::vector<std::vector<int>>& succ,
                                             int c, int c2, const std::vector<int>& slab,
                                             int sink) {
    // local ids: 0 = c (exit side only), 1 = c2 (entry side only), then a
    // split pair per slab vertex so each carries at most one unit
    std::vector<int> loc(succ.size(), -1);
    for (size_t j = 0; j < slab.size(); ++j) loc[slab[j]] = static_cast<int>(j);
    FlowNet net(2 + 2 * static_cast<int>(slab.size()));
    auto in_node = [&](int u) { return 2 + 2 * loc[u]; };
    auto out_node = [&](int u) { return 3 + 2 * loc[u]; };
    for (int u : slab) net.add(in_node(u), out_node(u), 1);

    auto add_host_arc = [&](int from_node, int w, bool direct_ok) {
        if (w == c2) {
            // both segments may reuse a direct hop between consecutive cut
            // vertices; arcs into the dummy sink stay exclusive so the
            // segments end at distinct targets
            net.add(from_node, 1, direct_ok && c2 != sink ? 2 : 1);
        } else if (loc[w] != -1) {
            net.add(from_node, in_node(w), 1);
        }
    };
    for (int w : succ[c]) add_host_arc(0, w, true);
    for (int u : slab)
        for (int w : succ[u]) add_host_arc(out_node(u), w, false);

    if (!net.augment(0, 1) || !net.augment(0, 1))
        throw InternalFlowInfeasible("slab between consecutive cut vertices carries < 2 units");

    auto host_of = [&](int node) {
        if (node == 0) return c;
        if (node == 1) return c2;
        return slab[(node - 2) / 2];
    };
    std::array<std::vector<int>, 2> segs;
    for (auto& seg : segs) {
        seg.push_back(c);
        int cur = 0;
        while (cur != 1) {
            int next = -1;
            for (int id : net.adj[cur]) {
                if (id % 2 != 0) continue;  // forward edges carry the flow
                if (net.edges[id ^ 1].cap <= 0) continue;
                net.edges[id ^ 1].cap -= 1;
                next = net.edges[id].to;
                break;
            }
            if (next == -1)
                throw InternalFlowInfeasible("flow decomposition lost a unit mid-slab");
            if (host_of(next) != seg.back()) seg.push_back(host_of(next));
            cur = next;
        }
    }
    return segs;
}

}  // namespace

MeetResult min_meeting(int n, const Query& q, const std::vector<std::pair<int, int>>& comp,
                       const std::vector<std::pair<int, int>>& common,
                       const std::vector<std::pair<int, int>>& tight1,
                       const std::vector<std::pair<int, int>>& tight2,
                       const std::vector<char>& on_both,
                       std::vector<std::pair<int, int>>* cands) {
    Dsu dsu(n);
    for (auto [u, v] : comp) dsu.unite(u, v);

    std::vector<int> comp_of(n);
    std::vector<std::vector<int>> members;
    {
        std::vector<int> comp_id(n, -1);
        for (int v = 0; v < n; ++v) {
            int r = dsu.find(v);
            if (comp_id[r] == -1) {
                comp_id[r] = static_cast<int>(members.size());
                members.emplace_back();
            }
            comp_of[v] = comp_id[r];
            members[comp_of[v]].push_back(v);
        }
    }
    int ncomp = static_cast<int>(members.size());
    std::vector<int> local(n, -1);
    for (const auto& mem : members)
        for (size_t j = 0; j < mem.size(); ++j) local[mem[j]] = static_cast<int>(j);

    // per-component arcs; dummies encoded as negative codes resolved per size
    enum DummyCode { SB = -1, SB1 = -2, SB2 = -3, TB1 = -4, TB2 = -5, TB = -6 };
    std::vector<std::vector<std::pair<int, int>>> arcs(ncomp);
    std::set<std::pair<int, int>> in_class(common.begin(), common.end());
    for (auto [u, v] : common) arcs[comp_of[u]].emplace_back(u, v);
    // a path enters the shared structure at its first shared vertex and
    // leaves at its last one; any tight arc outside the routing class can
    // play either role, including arcs between vertices of one component
    auto add_boundary = [&](const std::vector<std::pair<int, int>>& tight, int sbi, int tbi) {
        for (auto [x, y] : tight) {
            if (in_class.count({x, y})) continue;
            arcs[comp_of[y]].emplace_back(sbi, y);
            arcs[comp_of[x]].emplace_back(x, tbi);
        }
    };
    add_boundary(tight1, SB1, TB1);
    add_boundary(tight2, SB2, TB2);
    // terminals touch their dummies directly: the meeting vertex may be the
    // first or last vertex of a path
    arcs[comp_of[q.s1]].emplace_back(SB1, q.s1);
    arcs[comp_of[q.s2]].emplace_back(SB2, q.s2);
    arcs[comp_of[q.t1]].emplace_back(q.t1, TB1);
    arcs[comp_of[q.t2]].emplace_back(q.t2, TB2);

    MeetResult best;
    for (int ci = 0; ci < ncomp; ++ci) {
        int b = static_cast<int>(members[ci].size());
        int total = b + 6;
        auto node = [&](int v) { return v >= 0 ? local[v] : b - 1 - v; };  // -1 -> b, ...
        std::vector<std::vector<int>> succ(total), pred(total);
        auto link = [&](int u, int v) {
            succ[u].push_back(v);
            pred[v].push_back(u);
        };
        link(node(SB), node(SB1));
        link(node(SB), node(SB2));
        link(node(TB1), node(TB));
        link(node(TB2), node(TB));
        for (auto [u, v] : arcs[ci]) link(node(u), node(v));

        DominatorTree out = build_dominators(total, succ, node(SB));
        DominatorTree in = build_dominators(total, pred, node(TB));
        std::vector<char> bad_out = dummy_tainted(out, b, total);
        std::vector<char> bad_in = dummy_tainted(in, b, total);

        for (int v : members[ci]) {
            if (!on_both[v]) continue;
            int l = local[v];
            if (!out.reachable(l) || !in.reachable(l)) continue;
            if (bad_out[l] || bad_in[l]) continue;
            // each depth counts the root dummy and v itself; v is shared
            int alpha = out.depth[l] + in.depth[l] - 3;
            if (cands) cands->emplace_back(v, alpha);
            if (best.alpha == -1 || alpha < best.alpha ||
                (alpha == best.alpha && v < best.vstar)) {
                best.alpha = alpha;
                best.vstar = v;
            }
        }
    }
    return best;
}

LegPair tight_legs(int n, const std::vector<std::vector<int>>& succ0, int root, int a, int b) {
    if (a == b) throw InternalError("tight legs need two distinct targets");
    int sink = n;
    std::vector<std::vector<int>> succ(succ0);
    succ.resize(n + 1);
    succ[a].push_back(sink);
    succ[b].push_back(sink);

    DominatorTree dom = build_dominators(n + 1, succ, root);
    if (!dom.reachable(sink))
        throw InternalError("meeting vertex does not reach both leg targets");
    std::vector<int> chain;
    for (int v = sink; v != -1; v = dom.idom[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());

    std::vector<char> is_cut(n + 1, 0);
    for (int c : chain) is_cut[c] = 1;
    std::vector<int> order;
    for (int v = 0; v <= n; ++v)
        if (dom.reachable(v)) order.push_back(v);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return dom.depth[x] < dom.depth[y]; });
    // deepest cut vertex above each vertex; every vertex strictly between two
    // consecutive cuts on any root-to-sink path carries the earlier cut
    std::vector<int> near(n + 1, -1);
    std::vector<std::vector<int>> slab(n + 1);
    for (int v : order) {
        near[v] = is_cut[v] ? v : near[dom.idom[v]];
        if (!is_cut[v]) slab[near[v]].push_back(v);
    }

    LegPair legs;
    legs.leg1.push_back(root);
    legs.leg2.push_back(root);
    legs.cuts = static_cast<int>(chain.size()) - 1;  // chain minus the dummy sink
    for (size_t gi = 0; gi + 1 < chain.size(); ++gi) {
        int c = chain[gi], c2 = chain[gi + 1];
        std::array<std::vector<int>, 2> segs = gap_segments(succ, c, c2, slab[c], sink);
        bool last = c2 == sink;
        if (last) {
            // the segment arriving via `a` belongs to the first leg
            int pre0 = segs[0][segs[0].size() - 2];
            if (pre0 != a) std::swap(segs[0], segs[1]);
        }
        auto extend = [&](std::vector<int>& leg, const std::vector<int>& seg) {
            leg.insert(leg.end(), seg.begin() + 1, seg.end() - (last ? 1 : 0));
        };
        extend(legs.leg1, segs[0]);
        extend(legs.leg2, segs[1]);
    }
    return legs;
}

std::pair<std::vector<int>, std::vector<int>> stitch_through(
    const std::vector<std::vector<int>>& succ_out, const std::vector<std::vector<int>>& succ_in,
    int n, int vstar, int s1, int t1, int s2, int t2) {
    LegPair out = tight_legs(n, succ_out, vstar, t1, t2);
    LegPair in = tight_legs(n, succ_in, vstar, s1, s2);
    auto glue = [](const std::vector<int>& to_s, const std::vector<int>& to_t) {
        std::vector<int> p(to_s.rbegin(), to_s.rend());
        p.insert(p.end(), to_t.begin() + 1, to_t.end());
        return p;
    };
    return {glue(in.leg1, out.leg1), glue(in.leg2, out.leg2)};
}

std::array<std::vector<int>, 4> disjoint_legs(int n, const std::vector<std::vector<int>>& succ,
                                              int root, const std::array<int, 4>& targets) {
    // root and sink are single nodes, every other vertex a unit split pair
    int sink_in = 1;
    auto in_node = [&](int u) { return u == root ? 0 : 2 + 2 * u; };
    auto out_node = [&](int u) { return u == root ? 0 : 3 + 2 * u; };
    FlowNet net(2 + 2 * n);
    for (int u = 0; u < n; ++u)
        if (u != root) net.add(in_node(u), out_node(u), 1);
    for (int u = 0; u < n; ++u)
        for (int w : succ[u]) net.add(out_node(u), in_node(w), 1);
    for (int t : targets) net.add(out_node(t), sink_in, 1);

    for (int i = 0; i < 4; ++i)
        if (!net.augment(0, sink_in))
            throw FlowInfeasible("fewer than four disjoint legs from the meeting vertex");

    std::array<std::vector<int>, 4> legs;
    for (int i = 0; i < 4; ++i) {
        std::vector<int> hosts{root};
        int cur = 0;
        while (cur != sink_in) {
            int next = -1;
            for (int id : net.adj[cur]) {
                if (id % 2 != 0) continue;
                if (net.edges[id ^ 1].cap <= 0) continue;
                net.edges[id ^ 1].cap -= 1;
                next = net.edges[id].to;
                break;
            }
            if (next == -1) throw InternalFlowInfeasible("leg decomposition lost a unit");
            if (next != sink_in) {
                int host = (next - 2) / 2;
                if (host != hosts.back()) hosts.push_back(host);
            }
            cur = next;
        }
        // order the legs by the target each one reaches
        for (int j = 0; j < 4; ++j)
            if (targets[j] == hosts.back()) legs[j] = hosts;
    }
    return legs;
}

}  // namespace dsp::detail
