#include "dsp/shortest_paths.hpp"

#include <algorithm>
#include <queue>

namespace dsp {

namespace {

// Dijkstra on reduced weights w + h[tail] - h[head], which are non-negative
// for valid potentials. reverse = true walks arcs backwards (distances to src).
std::vector<int64_t> dijkstra(const WeightedGraph& g, int src,
                              const std::vector<int64_t>& h, bool reverse) {
    std::vector<int64_t> red(g.n, kInfDist);
    using Item = std::pair<int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    red[src] = 0;
    pq.push({0, src});
    const auto& adj = reverse ? g.in : g.out;
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != red[u]) continue;
        for (const AdjEntry& e : adj[u]) {
            int64_t w = reverse ? e.weight + h[e.to] - h[u] : e.weight + h[u] - h[e.to];
            if (red[u] + w < red[e.to]) {
                red[e.to] = red[u] + w;
                pq.push({red[e.to], e.to});
            }
        }
    }
    // translate back to true distances
    std::vector<int64_t> dist(g.n, kInfDist);
    for (int v = 0; v < g.n; ++v) {
        if (red[v] >= kInfDist) continue;
        dist[v] = reverse ? red[v] - h[v] + h[src] : red[v] - h[src] + h[v];
    }
    return dist;
}

}  // namespace

std::vector<int64_t> johnson_potentials(const WeightedGraph& g) {
    // Bellman-Ford from a virtual source connected to every vertex by a
    // zero-weight arc, so every vertex starts at potential 0.
    std::vector<int64_t> h(g.n, 0);
    bool changed = true;
    for (int round = 0; round < g.n && changed; ++round) {
        changed = false;
        for (const Arc& a : g.arcs) {
            if (h[a.tail] + a.weight < h[a.head]) {
                h[a.head] = h[a.tail] + a.weight;
                changed = true;
            }
        }
    }
    if (changed) {
        for (const Arc& a : g.arcs)
            if (h[a.tail] + a.weight < h[a.head])
                throw NegativeCycle("graph contains a negative-weight cycle");
    }
    return h;
}

void assert_no_zero_cycle(const WeightedGraph& g, const std::vector<int64_t>& potentials) {
    // Cycle detection restricted to arcs of reduced weight zero.
    std::vector<std::vector<int>> tight(g.n);
    for (const Arc& a : g.arcs)
        if (potentials[a.tail] + a.weight - potentials[a.head] == 0)
            tight[a.tail].push_back(a.head);

    enum { White, Gray, Black };
    std::vector<char> color(g.n, White);
    std::vector<int> parent(g.n, -1);
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != White) continue;
        // iterative DFS with explicit arc cursors
        std::vector<std::pair<int, size_t>> stack{{start, 0}};
        color[start] = Gray;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < tight[v].size()) {
                int w = tight[v][idx++];
                if (color[w] == White) {
                    color[w] = Gray;
                    parent[w] = v;
                    stack.push_back({w, 0});
                } else if (color[w] == Gray) {
                    std::vector<int> cycle{w};
                    for (int u = v; u != w; u = parent[u]) cycle.push_back(u);
                    std::reverse(cycle.begin() + 1, cycle.end());
                    cycle.push_back(w);
                    throw ZeroCycle("graph contains a zero-weight cycle", cycle);
                }
            } else {
                color[v] = Black;
                stack.pop_back();
            }
        }
    }
}

DistanceMatrix apsp(const WeightedGraph& g) {
    std::vector<int64_t> h(g.n, 0);
    if (g.directed()) h = johnson_potentials(g);
    DistanceMatrix D;
    D.n = g.n;
    D.d.assign(static_cast<size_t>(g.n) * g.n, kInfDist);
    for (int s = 0; s < g.n; ++s) {
        std::vector<int64_t> row = dijkstra(g, s, h, false);
        std::copy(row.begin(), row.end(), D.d.begin() + static_cast<size_t>(s) * g.n);
    }
    return D;
}

std::vector<int64_t> sssp_from(const WeightedGraph& g, int s) {
    std::vector<int64_t> h(g.n, 0);
    if (g.directed()) h = johnson_potentials(g);
    return dijkstra(g, s, h, false);
}

std::vector<int64_t> sssp_to(const WeightedGraph& g, int t) {
    std::vector<int64_t> h(g.n, 0);
    if (g.directed()) h = johnson_potentials(g);
    return dijkstra(g, t, h, true);
}

std::vector<int64_t> sssp_from(const WeightedGraph& g, int s,
                               const std::vector<int64_t>& potentials) {
    return dijkstra(g, s, potentials, false);
}

std::vector<int64_t> sssp_to(const WeightedGraph& g, int t,
                             const std::vector<int64_t>& potentials) {
    return dijkstra(g, t, potentials, true);
}

namespace {

std::vector<int> topo_order(const WeightedGraph& g) {
    std::vector<int> indeg(g.n, 0), order;
    for (const Arc& a : g.arcs) ++indeg[a.head];
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    order.reserve(g.n);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (const AdjEntry& e : g.out[v])
            if (--indeg[e.to] == 0) stack.push_back(e.to);
    }
    if (static_cast<int>(order.size()) != g.n) throw NotADag("graph contains a cycle");
    return order;
}

}  // namespace

std::vector<int64_t> dag_sssp_from(const WeightedGraph& g, int s) {
    std::vector<int64_t> dist(g.n, kInfDist);
    dist[s] = 0;
    for (int v : topo_order(g)) {
        if (dist[v] >= kInfDist) continue;
        for (const AdjEntry& e : g.out[v])
            dist[e.to] = std::min(dist[e.to], dist[v] + e.weight);
    }
    return dist;
}

std::vector<int64_t> dag_sssp_to(const WeightedGraph& g, int t) {
    std::vector<int64_t> dist(g.n, kInfDist);
    dist[t] = 0;
    std::vector<int> order = topo_order(g);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        for (const AdjEntry& e : g.out[v])
            if (dist[e.to] < kInfDist) dist[v] = std::min(dist[v], dist[e.to] + e.weight);
    }
    return dist;
}

bool vertex_on_sp(const DistanceMatrix& D, int x, int v, int y) {
    if (!D.reachable(x, v) || !D.reachable(v, y)) return false;
    return D.dist(x, v) + D.dist(v, y) == D.dist(x, y);
}

bool edge_on_sp(const DistanceMatrix& D, const WeightedGraph& g, int x, int arc, int y) {
    const Arc& a = g.arcs[arc];
    if (!D.reachable(x, a.tail) || !D.reachable(a.head, y)) return false;
    return D.dist(x, a.tail) + a.weight + D.dist(a.head, y) == D.dist(x, y);
}

TightDag tight_dag_from_row(const WeightedGraph& g, const std::vector<int64_t>& dist_row,
                            int x, DagDirection direction) {
    TightDag dag;
    dag.n = g.n;
    dag.root = x;
    dag.direction = direction;
    dag.succ.assign(g.n, {});
    dag.pred.assign(g.n, {});
    for (size_t i = 0; i < g.arcs.size(); ++i) {
        const Arc& a = g.arcs[i];
        int id = static_cast<int>(i);
        auto add = [&](int tail, int head, int64_t w) {
            if (dist_row[tail] >= kInfDist || dist_row[head] >= kInfDist) return;
            if (dist_row[tail] + w != dist_row[head]) return;
            dag.succ[tail].push_back({head, w, id});
            dag.pred[head].push_back({tail, w, id});
        };
        if (direction == DagDirection::OutOf) {
            add(a.tail, a.head, a.weight);
            if (!g.directed()) add(a.head, a.tail, a.weight);
        } else {
            // walk the host arc backwards: dist_row holds dist(., x)
            add(a.head, a.tail, a.weight);
            if (!g.directed()) add(a.tail, a.head, a.weight);
        }
    }
    // Kahn's algorithm over all vertices
    std::vector<int> indeg(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (const AdjEntry& e : dag.succ[v]) ++indeg[e.to];
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    dag.topo.reserve(g.n);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        dag.topo.push_back(v);
        for (const AdjEntry& e : dag.succ[v])
            if (--indeg[e.to] == 0) stack.push_back(e.to);
    }
    if (static_cast<int>(dag.topo.size()) != g.n)
        throw InternalError("tight-arc subgraph is cyclic; zero cycles not excluded");
    dag.topo_index.assign(g.n, -1);
    for (int i = 0; i < g.n; ++i) dag.topo_index[dag.topo[i]] = i;
    return dag;
}

TightDag tight_dag(const WeightedGraph& g, const DistanceMatrix& D, int x,
                   DagDirection direction) {
    std::vector<int64_t> row(g.n);
    for (int v = 0; v < g.n; ++v)
        row[v] = direction == DagDirection::OutOf ? D.dist(x, v) : D.dist(v, x);
    return tight_dag_from_row(g, row, x, direction);
}

}  // namespace dsp
