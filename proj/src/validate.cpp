#include "dsp/validate.hpp"

#include <algorithm>
#include <unordered_set>

namespace dsp {

std::optional<int64_t> walk_weight(const WeightedGraph& g, const std::vector<int>& verts) {
    if (verts.empty()) return std::nullopt;
    int64_t total = 0;
    for (size_t i = 0; i + 1 < verts.size(); ++i) {
        bool found = false;
        for (const AdjEntry& e : g.out[verts[i]]) {
            if (e.to == verts[i + 1]) {
                total += e.weight;
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return total;
}

bool is_simple_seq(const std::vector<int>& verts) {
    std::unordered_set<int> seen;
    for (int v : verts)
        if (!seen.insert(v).second) return false;
    return true;
}

int shared_vertex_count(const std::vector<int>& a, const std::vector<int>& b) {
    std::unordered_set<int> sb(b.begin(), b.end());
    int k = 0;
    for (int v : a)
        if (sb.count(v)) ++k;
    return k;
}

bool internally_disjoint_seqs(const std::vector<int>& p1, const std::vector<int>& p2,
                              const Query& q) {
    std::unordered_set<int> allowed;
    for (int a : {q.s1, q.t1})
        if (a == q.s2 || a == q.t2) allowed.insert(a);
    std::unordered_set<int> s2(p2.begin(), p2.end());
    for (int v : p1)
        if (s2.count(v) && !allowed.count(v)) return false;
    return true;
}

bool valid_pair(const WeightedGraph& g, const Query& q, const std::vector<int>& p1,
                const std::vector<int>& p2, int64_t d1, int64_t d2, int expected_k) {
    if (p1.empty() || p2.empty()) return false;
    if (p1.front() != q.s1 || p1.back() != q.t1) return false;
    if (p2.front() != q.s2 || p2.back() != q.t2) return false;
    if (!is_simple_seq(p1) || !is_simple_seq(p2)) return false;
    if (walk_weight(g, p1) != std::optional<int64_t>(d1)) return false;
    if (walk_weight(g, p2) != std::optional<int64_t>(d2)) return false;
    if (expected_k >= 0 && shared_vertex_count(p1, p2) != expected_k) return false;
    return true;
}

}  // namespace dsp
