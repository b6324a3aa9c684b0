#include <algorithm>

#include "dsp/meeting.hpp"
#include "dsp/min2dsp.hpp"
#include "dsp/validate.hpp"

namespace dsp {

namespace {

void require_distinct(const Query& q) {
    int terms[4] = {q.s1, q.t1, q.s2, q.t2};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (terms[i] == terms[j])
                throw TerminalsNotDistinct("the four terminals must be pairwise distinct");
}

}  // namespace

Min2Result min2dsp_solve_dag(const WeightedGraph& g, const Query& q, uint64_t seed,
                             int trials) {
    if (!g.directed()) throw KindMismatch("DAG solver expects a directed graph");
    if (!is_dag(g)) throw NotADag("graph contains a directed cycle");
    require_distinct(q);

    std::vector<int64_t> d_s1 = dag_sssp_from(g, q.s1), to_t1 = dag_sssp_to(g, q.t1);
    std::vector<int64_t> d_s2 = dag_sssp_from(g, q.s2), to_t2 = dag_sssp_to(g, q.t2);
    if (dsp2_decide_on_rows(g, q, d_s1, to_t1, d_s2, to_t2, seed, trials))
        return {0, std::nullopt};
    int64_t d1 = d_s1[q.t1], d2 = d_s2[q.t2];

    std::vector<std::pair<int, int>> tight1, tight2, common;
    for (const Arc& a : g.arcs) {
        bool t1 = d_s1[a.tail] < kInfDist && to_t1[a.head] < kInfDist &&
                  d_s1[a.tail] + a.weight + to_t1[a.head] == d1;
        bool t2 = d_s2[a.tail] < kInfDist && to_t2[a.head] < kInfDist &&
                  d_s2[a.tail] + a.weight + to_t2[a.head] == d2;
        if (t1) tight1.emplace_back(a.tail, a.head);
        if (t2) tight2.emplace_back(a.tail, a.head);
        if (t1 && t2) common.emplace_back(a.tail, a.head);
    }
    std::vector<char> on_both(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        on_both[v] = d_s1[v] < kInfDist && to_t1[v] < kInfDist && d_s1[v] + to_t1[v] == d1 &&
                     d_s2[v] < kInfDist && to_t2[v] < kInfDist && d_s2[v] + to_t2[v] == d2;

    detail::MeetResult meet =
        detail::min_meeting(g.n, q, common, common, tight1, tight2, on_both);
    if (meet.alpha == -1)
        throw NoIntersectingPair("every shortest-path pair intersects, yet no meeting vertex");

    std::vector<int64_t> row_out = dag_sssp_from(g, meet.vstar);
    std::vector<int64_t> row_in = dag_sssp_to(g, meet.vstar);
    std::vector<std::vector<int>> succ_out(g.n), succ_in(g.n);
    for (const Arc& a : g.arcs) {
        if (row_out[a.tail] < kInfDist && row_out[a.head] < kInfDist &&
            row_out[a.tail] + a.weight == row_out[a.head])
            succ_out[a.tail].push_back(a.head);
        if (row_in[a.tail] < kInfDist && row_in[a.head] < kInfDist &&
            row_in[a.head] + a.weight == row_in[a.tail])
            succ_in[a.head].push_back(a.tail);
    }
    auto paths = detail::stitch_through(succ_out, succ_in, g.n, meet.vstar, q.s1, q.t1,
                                        q.s2, q.t2);
    if (!valid_pair(g, q, paths.first, paths.second, d1, d2, meet.alpha))
        throw InternalError("stitched witness failed validation");
    return {meet.alpha, std::move(paths)};
}

}  // namespace dsp
