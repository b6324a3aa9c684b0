#include "dsp/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace dsp::oracle {

namespace {

// positions of each vertex on a simple path
std::unordered_map<int, int> positions(const OPath& p) {
    std::unordered_map<int, int> pos;
    for (size_t i = 0; i < p.verts.size(); ++i) pos[p.verts[i]] = static_cast<int>(i);
    return pos;
}

std::vector<int> shared_vertices(const OPath& p1, const OPath& p2) {
    std::unordered_set<int> s2(p2.verts.begin(), p2.verts.end());
    std::vector<int> shared;
    for (int v : p1.verts)
        if (s2.count(v)) shared.push_back(v);  // ordered along p1
    return shared;
}

}  // namespace

PathSet enum_paths(const WeightedGraph& g, const DistanceMatrix& D, int x, int y, int cap) {
    if (cap < 1) throw InputError("path enumeration cap must be at least 1");
    PathSet out;
    if (!D.reachable(x, y)) return out;
    if (x == y) {
        out.push_back({{x}, {}});
        return out;
    }
    TightDag dag = tight_dag(g, D, x, DagDirection::OutOf);
    OPath cur;
    cur.verts.push_back(x);
    // DFS over tight arcs whose head still lies on a shortest x->y path;
    // every such prefix extends to y, so no dead ends are explored.
    std::vector<size_t> idx{0};
    while (!cur.verts.empty()) {
        int v = cur.verts.back();
        if (v == y) {
            if (static_cast<int>(out.size()) >= cap)
                throw CapExceeded("more shortest paths than the enumeration cap");
            out.push_back(cur);
            cur.verts.pop_back();
            if (!cur.edges.empty()) cur.edges.pop_back();
            idx.pop_back();
            continue;
        }
        bool advanced = false;
        for (size_t& i = idx.back(); i < dag.succ[v].size();) {
            const AdjEntry& e = dag.succ[v][i++];
            if (!vertex_on_sp(D, x, e.to, y)) continue;
            cur.verts.push_back(e.to);
            cur.edges.push_back(e.edge);
            idx.push_back(0);
            advanced = true;
            break;
        }
        if (!advanced) {
            cur.verts.pop_back();
            if (!cur.edges.empty()) cur.edges.pop_back();
            idx.pop_back();
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int intersection_size(const OPath& p1, const OPath& p2) {
    return static_cast<int>(shared_vertices(p1, p2).size());
}

bool internally_disjoint(const OPath& p1, const OPath& p2, const Query& q) {
    std::unordered_set<int> allowed;
    for (int a : {q.s1, q.t1})
        if (a == q.s2 || a == q.t2) allowed.insert(a);
    for (int v : shared_vertices(p1, p2))
        if (!allowed.count(v)) return false;
    return true;
}

MinIntersection min_intersection(const WeightedGraph& g, const Query& q, int cap) {
    DistanceMatrix D = apsp(g);
    PathSet pi1 = enum_paths(g, D, q.s1, q.t1, cap);
    PathSet pi2 = enum_paths(g, D, q.s2, q.t2, cap);
    MinIntersection r;
    for (const OPath& p1 : pi1) {
        auto pos1 = positions(p1);
        for (const OPath& p2 : pi2) {
            std::vector<int> shared = shared_vertices(p1, p2);
            int k = static_cast<int>(shared.size());
            if (r.min_overall == -1 || k < r.min_overall ||
                (k == r.min_overall &&
                 std::make_pair(p1.verts, p2.verts) <
                     std::make_pair(r.witness1.verts, r.witness2.verts))) {
                r.min_overall = k;
                r.witness1 = p1;
                r.witness2 = p2;
            }
            if (internally_disjoint(p1, p2, q)) r.disjoint_exists = true;
            if (k == 1) r.singular_exists = true;
            if (k >= 2) {
                // shared is ordered along p1; compare with the order along p2
                auto pos2 = positions(p2);
                bool inc = true, dec = true;
                for (size_t i = 1; i < shared.size(); ++i) {
                    if (pos2[shared[i]] < pos2[shared[i - 1]]) inc = false;
                    if (pos2[shared[i]] > pos2[shared[i - 1]]) dec = false;
                }
                if (inc && (r.min_agreeing == -1 || k < r.min_agreeing)) r.min_agreeing = k;
                if (dec && (r.min_disagreeing == -1 || k < r.min_disagreeing))
                    r.min_disagreeing = k;
                if (!inc && !dec) r.all_classified = false;
            }
        }
    }
    return r;
}

std::pair<OPath, OPath> swap_pair(const OPath& p1, const OPath& p2, int a, int b) {
    auto pos1 = positions(p1), pos2 = positions(p2);
    if (!pos1.count(a) || !pos1.count(b) || !pos2.count(a) || !pos2.count(b) ||
        pos1[a] >= pos1[b] || pos2[a] >= pos2[b])
        throw PrecedenceViolated("swap requires a strictly before b on both paths");
    auto splice = [](const OPath& own, const OPath& other, int ia, int ib, int oa, int ob) {
        OPath r;
        r.verts.assign(own.verts.begin(), own.verts.begin() + ia + 1);
        r.verts.insert(r.verts.end(), other.verts.begin() + oa + 1,
                       other.verts.begin() + ob + 1);
        r.verts.insert(r.verts.end(), own.verts.begin() + ib + 1, own.verts.end());
        r.edges.assign(own.edges.begin(), own.edges.begin() + ia);
        r.edges.insert(r.edges.end(), other.edges.begin() + oa, other.edges.begin() + ob);
        r.edges.insert(r.edges.end(), own.edges.begin() + ib, own.edges.end());
        return r;
    };
    OPath q1 = splice(p1, p2, pos1[a], pos1[b], pos2[a], pos2[b]);
    OPath q2 = splice(p2, p1, pos2[a], pos2[b], pos1[a], pos1[b]);
    return {q1, q2};
}

std::vector<std::pair<int, int>> concordant_pairs(const OPath& p1, const OPath& p2,
                                                  const Query& q) {
    auto pos1 = positions(p1), pos2 = positions(p2);
    std::unordered_set<int> excl;
    for (int a : {q.s1, q.t1})
        if (a == q.s2 || a == q.t2) excl.insert(a);
    std::vector<int> common;
    for (int v : p1.verts)
        if (pos2.count(v) && !excl.count(v)) common.push_back(v);

    auto prefix = [](const OPath& p, int end) {
        OPath r;
        r.verts.assign(p.verts.begin(), p.verts.begin() + end + 1);
        return r;
    };
    auto suffix = [](const OPath& p, int begin) {
        OPath r;
        r.verts.assign(p.verts.begin() + begin, p.verts.end());
        return r;
    };

    std::vector<std::pair<int, int>> pairs;
    for (int a : common) {
        for (int b : common) {
            if (pos1[a] > pos1[b] || pos2[a] > pos2[b]) continue;
            OPath pre1 = prefix(p1, pos1[a]), pre2 = prefix(p2, pos2[a]);
            if (!internally_disjoint(pre1, pre2, Query{q.s1, a, q.s2, a})) continue;
            OPath suf1 = suffix(p1, pos1[b]), suf2 = suffix(p2, pos2[b]);
            if (!internally_disjoint(suf1, suf2, Query{b, q.t1, b, q.t2})) continue;
            pairs.emplace_back(a, b);
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

void SymbolicPoly::toggle(std::vector<int> mono) {
    std::sort(mono.begin(), mono.end());
    auto it = monomials.find(mono);
    if (it == monomials.end())
        monomials.insert(std::move(mono));
    else
        monomials.erase(it);
}

GF64 SymbolicPoly::eval(const EdgeAssignment& za) const {
    GF64 sum = GF64::zero();
    for (const auto& mono : monomials) {
        GF64 prod = GF64::one();
        for (int e : mono) prod *= za[e];
        sum += prod;
    }
    return sum;
}

SymbolicPoly symbolic_F(const WeightedGraph& g, const DistanceMatrix& D, int x, int y,
                        int cap) {
    SymbolicPoly poly;
    for (const OPath& p : enum_paths(g, D, x, y, cap)) poly.toggle(p.edges);
    return poly;
}

SymbolicPoly symbolic_Fdisj(const WeightedGraph& g, const Query& q, int cap) {
    DistanceMatrix D = apsp(g);
    PathSet pi1 = enum_paths(g, D, q.s1, q.t1, cap);
    PathSet pi2 = enum_paths(g, D, q.s2, q.t2, cap);
    SymbolicPoly poly;
    for (const OPath& p1 : pi1)
        for (const OPath& p2 : pi2) {
            if (!internally_disjoint(p1, p2, q)) continue;
            std::vector<int> mono = p1.edges;
            mono.insert(mono.end(), p2.edges.begin(), p2.edges.end());
            poly.toggle(std::move(mono));
        }
    return poly;
}

}  // namespace dsp::oracle
