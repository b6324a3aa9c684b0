#include "dsp/dominators.hpp"

#include <algorithm>

namespace dsp {

namespace {

// State for the semidominator phase, indexed by preorder number.
struct SemiNca {
    std::vector<int> ancestor;  // forest link, -1 when not linked yet
    std::vector<int> label;     // vertex of minimum semi on the forest path
    std::vector<int> semi;

    int eval(int v) {
        if (ancestor[v] == -1) return v;
        compress(v);
        return label[v];
    }

    void compress(int v) {
        // iterative path compression
        std::vector<int> path;
        while (ancestor[ancestor[v]] != -1) {
            path.push_back(v);
            v = ancestor[v];
        }
        while (!path.empty()) {
            int u = path.back();
            path.pop_back();
            if (semi[label[ancestor[u]]] < semi[label[u]]) label[u] = label[ancestor[u]];
            ancestor[u] = ancestor[ancestor[u]];
        }
    }
};

}  // namespace

DominatorTree build_dominators(int n, const std::vector<std::vector<int>>& succ, int root) {
    if (root < 0 || root >= n) throw RootMissing("dominator root out of range");

    std::vector<int> pre(n, -1), order, parent_pre;
    order.reserve(n);
    // iterative DFS preorder
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    pre[root] = 0;
    order.push_back(root);
    parent_pre.push_back(-1);
    while (!stack.empty()) {
        auto& [v, idx] = stack.back();
        if (idx < succ[v].size()) {
            int w = succ[v][idx++];
            if (pre[w] == -1) {
                pre[w] = static_cast<int>(order.size());
                order.push_back(w);
                parent_pre.push_back(pre[v]);
                stack.push_back({w, 0});
            }
        } else {
            stack.pop_back();
        }
    }
    int reached = static_cast<int>(order.size());

    std::vector<std::vector<int>> pred_pre(reached);
    for (int i = 0; i < reached; ++i)
        for (int w : succ[order[i]])
            if (pre[w] != -1) pred_pre[pre[w]].push_back(i);

    SemiNca st;
    st.ancestor.assign(reached, -1);
    st.label.resize(reached);
    st.semi.resize(reached);
    for (int i = 0; i < reached; ++i) st.label[i] = st.semi[i] = i;

    for (int i = reached - 1; i >= 1; --i) {
        for (int u : pred_pre[i]) st.semi[i] = std::min(st.semi[i], st.semi[st.eval(u)]);
        st.ancestor[i] = parent_pre[i];
    }

    // NCA pass: idom(v) = nearest common ancestor of parent(v) and semi(v)
    std::vector<int> idom_pre(reached, 0);
    for (int i = 1; i < reached; ++i) {
        int x = parent_pre[i];
        while (x > st.semi[i]) x = idom_pre[x];
        idom_pre[i] = x;
    }

    DominatorTree t;
    t.root = root;
    t.idom.assign(n, -1);
    t.depth.assign(n, kInfDepth);
    t.depth[root] = 1;
    for (int i = 1; i < reached; ++i) {
        int v = order[i];
        t.idom[v] = order[idom_pre[i]];
        t.depth[v] = t.depth[t.idom[v]] + 1;  // preorder of idom is smaller, already set
    }
    return t;
}

DominatorTree build_dominators(const TightDag& dag, int root) {
    std::vector<std::vector<int>> succ(dag.n);
    for (int v = 0; v < dag.n; ++v)
        for (const AdjEntry& e : dag.succ[v]) succ[v].push_back(e.to);
    return build_dominators(dag.n, succ, root);
}

std::vector<int> cut_vertices(const TightDag& dag, int s, int t) {
    DominatorTree tree = build_dominators(dag, s);
    if (!tree.reachable(t)) throw Unreachable("t is unreachable from s in the tight DAG");
    std::vector<int> chain;
    for (int v = t; v != -1; v = tree.idom[v]) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

DeltaTable delta_from(const WeightedGraph& g, const DistanceMatrix& D, int v) {
    TightDag dag = tight_dag(g, D, v, DagDirection::OutOf);
    DominatorTree tree = build_dominators(dag, v);
    DeltaTable table;
    table.source = v;
    table.delta = tree.depth;
    return table;
}

}  // namespace dsp
