#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dsp/min2dsp.hpp"
#include "dsp/oracle.hpp"
#include "dsp/validate.hpp"

using namespace dsp;

namespace {

// random positive instance with four distinct terminals, both pairs reachable,
// and the oracle's enumeration affordable
struct Inst {
    WeightedGraph g;
    DistanceMatrix D;
    Query q;
    oracle::MinIntersection mi;
};

std::optional<Inst> try_make(GraphKind kind, bool dag, int nmax, std::mt19937_64& rng) {
    int n = 4 + static_cast<int>(rng() % (nmax - 3));
    long cap = kind == GraphKind::Directed && !dag ? static_cast<long>(n) * (n - 1)
                                                   : static_cast<long>(n) * (n - 1) / 2;
    int m = 1 + static_cast<int>(rng() % cap);
    Inst inst;
    if (dag) {
        std::set<std::pair<int, int>> seen;
        inst.g.kind = GraphKind::Directed;
        inst.g.n = n;
        for (int tries = 0; static_cast<int>(inst.g.arcs.size()) < m && tries < 8 * m; ++tries) {
            int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
            if (a >= b || !seen.insert({a, b}).second) continue;
            inst.g.arcs.push_back({a, b, 1 + static_cast<int64_t>(rng() % 8)});
        }
        inst.g.finalize();
    } else {
        inst.g = gen_random(n, m, 1, 8, kind, rng());
    }
    inst.D = apsp(inst.g);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && inst.D.reachable(x, y)) pairs.push_back({x, y});
    for (int tries = 0; tries < 30; ++tries) {
        if (pairs.empty()) return std::nullopt;
        auto [s1, t1] = pairs[rng() % pairs.size()];
        auto [s2, t2] = pairs[rng() % pairs.size()];
        std::set<int> terms{s1, t1, s2, t2};
        if (terms.size() != 4) continue;
        inst.q = Query{s1, t1, s2, t2};
        try {
            inst.mi = oracle::min_intersection(inst.g, inst.q, oracle::kDefaultPathCap);
        } catch (const CapExceeded&) {
            return std::nullopt;
        }
        return inst;
    }
    return std::nullopt;
}

Inst make(GraphKind kind, bool dag, int nmax, std::mt19937_64& rng) {
    for (;;) {
        auto inst = try_make(kind, dag, nmax, rng);
        if (inst) return std::move(*inst);
    }
}

void check_witness(const Inst& inst, const Min2Result& res) {
    if (res.k >= 1) {
        REQUIRE(res.paths.has_value());
        int64_t d1 = inst.D.dist(inst.q.s1, inst.q.t1);
        int64_t d2 = inst.D.dist(inst.q.s2, inst.q.t2);
        CHECK(valid_pair(inst.g, inst.q, res.paths->first, res.paths->second, d1, d2, res.k));
    }
}

}  // namespace

TEST_CASE("directed minimum matches the oracle") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 30; ++it) {
        Inst inst = make(GraphKind::Directed, false, 7, rng);
        CHECK(min2dsp_min_k(inst.g, inst.q, rng()).k == inst.mi.min_overall);
    }
}

TEST_CASE("DAG solver matches the oracle and returns witnesses") {
    std::mt19937_64 rng(42);
    for (int it = 0; it < 50; ++it) {
        Inst inst = make(GraphKind::Directed, true, 10, rng);
        Min2Result res = min2dsp_solve_dag(inst.g, inst.q, rng());
        CHECK(res.k == inst.mi.min_overall);
        check_witness(inst, res);
    }
}

TEST_CASE("undirected solver matches the oracle and returns witnesses") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 50; ++it) {
        Inst inst = make(GraphKind::Undirected, false, 9, rng);
        Min2Result res = min2dsp_solve_undirected(inst.g, inst.q, rng());
        CHECK(res.k == inst.mi.min_overall);
        check_witness(inst, res);
    }
}

TEST_CASE("solvers agree across formulations") {
    std::mt19937_64 rng(44);
    for (int it = 0; it < 10; ++it) {
        Inst u = make(GraphKind::Undirected, false, 7, rng);
        CHECK(min2dsp_solve_undirected(u.g, u.q, 5).k ==
              min2dsp_min_k(bidirect(u.g), u.q, 5).k);
        Inst d = make(GraphKind::Directed, true, 8, rng);
        CHECK(min2dsp_solve_dag(d.g, d.q, 5).k == min2dsp_min_k(d.g, d.q, 5).k);
    }
}

TEST_CASE("corridor DAG forces three intersections") {
    WeightedGraph g = parse_graph(std::string(
        "directed 7 7\n0 2 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n4 6 1\n0 5 9\n"));
    Min2Result res = min2dsp_solve_dag(g, Query{0, 5, 1, 6}, 7);
    CHECK(res.k == 3);
    REQUIRE(res.paths.has_value());
    CHECK(shared_vertex_count(res.paths->first, res.paths->second) == 3);
}

TEST_CASE("undirected star forces one intersection") {
    WeightedGraph g = parse_graph(std::string(
        "undirected 5 4\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n"));
    Min2Result res = min2dsp_solve_undirected(g, Query{0, 1, 2, 3}, 7);
    CHECK(res.k == 1);
    REQUIRE(res.paths.has_value());
    CHECK(shared_vertex_count(res.paths->first, res.paths->second) == 1);
}

TEST_CASE("input guards") {
    WeightedGraph big = gen_random(70, 200, 1, 5, GraphKind::Directed, 9);
    CHECK_THROWS_AS(min2dsp_min_k(big, Query{0, 1, 2, 3}, 1), InstanceTooLarge);

    WeightedGraph u = parse_graph(std::string("undirected 4 3\n0 1 1\n1 2 1\n2 3 1\n"));
    CHECK_THROWS_AS(min2dsp_min_k(u, Query{0, 1, 2, 3}, 1), KindMismatch);
    CHECK_THROWS_AS(min2dsp_solve_dag(u, Query{0, 1, 2, 3}, 1), KindMismatch);
    CHECK_THROWS_AS(min2dsp_solve_undirected(u, Query{0, 1, 2, 1}, 1), TerminalsNotDistinct);

    WeightedGraph cyc = parse_graph(std::string("directed 4 4\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n"));
    CHECK_THROWS_AS(min2dsp_solve_dag(cyc, Query{0, 1, 2, 3}, 1), NotADag);
    CHECK_THROWS_AS(min2dsp_solve_undirected(cyc, Query{0, 1, 2, 3}, 1), KindMismatch);

    WeightedGraph neg = parse_graph(std::string("directed 4 3\n0 1 -1\n1 2 1\n2 3 1\n"));
    CHECK_THROWS_AS(min2dsp_min_k(neg, Query{0, 1, 2, 3}, 1), NonPositiveWeight);
}
