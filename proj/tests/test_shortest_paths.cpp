#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsp/shortest_paths.hpp"

using namespace dsp;

namespace {

// Floyd-Warshall reference, valid when no negative cycle exists
std::vector<int64_t> floyd(const WeightedGraph& g) {
    int n = g.n;
    std::vector<int64_t> d(static_cast<size_t>(n) * n, kInfDist);
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(v) * n + v] = 0;
    for (const Arc& a : g.arcs) {
        auto& cell = d[static_cast<size_t>(a.tail) * n + a.head];
        cell = std::min(cell, a.weight);
        if (!g.directed()) {
            auto& rev = d[static_cast<size_t>(a.head) * n + a.tail];
            rev = std::min(rev, a.weight);
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int64_t via = d[static_cast<size_t>(i) * n + k] + d[static_cast<size_t>(k) * n + j];
                if (d[static_cast<size_t>(i) * n + k] < kInfDist &&
                    d[static_cast<size_t>(k) * n + j] < kInfDist)
                    d[static_cast<size_t>(i) * n + j] =
                        std::min(d[static_cast<size_t>(i) * n + j], via);
            }
    return d;
}

}  // namespace

TEST_CASE("apsp and single-source rows match Floyd-Warshall") {
    std::mt19937_64 rng(5);
    int done = 0;
    while (done < 60) {
        int n = 2 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % (n * (n - 1)));
        bool neg = done % 3 == 0;
        WeightedGraph g = gen_random(n, m, neg ? -4 : 1, 9, GraphKind::Directed, rng());
        DistanceMatrix D;
        try {
            D = apsp(g);
        } catch (const NegativeCycle&) {
            continue;
        }
        auto ref = floyd(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(D.dist(i, j) == ref[static_cast<size_t>(i) * n + j]);
        auto pot = johnson_potentials(g);
        for (int s = 0; s < n; ++s) {
            auto row = sssp_from(g, s, pot);
            auto col = sssp_to(g, s, pot);
            for (int v = 0; v < n; ++v) {
                CHECK(row[v] == D.dist(s, v));
                CHECK(col[v] == D.dist(v, s));
            }
        }
        ++done;
    }
}

TEST_CASE("undirected distances are symmetric and match the reference") {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + static_cast<int>(rng() % 8);
        int m = 1 + static_cast<int>(rng() % (n * (n - 1) / 2));
        WeightedGraph g = gen_random(n, m, 1, 9, GraphKind::Undirected, rng());
        DistanceMatrix D = apsp(g);
        auto ref = floyd(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                CHECK(D.dist(i, j) == ref[static_cast<size_t>(i) * n + j]);
                CHECK(D.dist(i, j) == D.dist(j, i));
            }
    }
}

TEST_CASE("dag rows match apsp and reject cyclic graphs") {
    WeightedGraph g = parse_graph(std::string("directed 4 4\n0 1 2\n0 2 -1\n2 1 3\n1 3 1\n"));
    DistanceMatrix D = apsp(g);
    auto row = dag_sssp_from(g, 0);
    auto col = dag_sssp_to(g, 3);
    for (int v = 0; v < g.n; ++v) {
        CHECK(row[v] == D.dist(0, v));
        CHECK(col[v] == D.dist(v, 3));
    }
    WeightedGraph cyc = parse_graph(std::string("directed 2 2\n0 1 1\n1 0 1\n"));
    CHECK_THROWS_AS(dag_sssp_from(cyc, 0), NotADag);
}

TEST_CASE("negative and zero cycles are told apart") {
    WeightedGraph neg = parse_graph(std::string("directed 2 2\n0 1 1\n1 0 -2\n"));
    CHECK_THROWS_AS(johnson_potentials(neg), NegativeCycle);

    WeightedGraph zero = parse_graph(std::string("directed 2 2\n0 1 1\n1 0 -1\n"));
    auto pot = johnson_potentials(zero);
    try {
        assert_no_zero_cycle(zero, pot);
        FAIL("zero cycle not detected");
    } catch (const ZeroCycle& e) {
        REQUIRE(e.cycle.size() >= 3);
        CHECK(e.cycle.front() == e.cycle.back());
        int64_t w = 0;
        for (size_t i = 0; i + 1 < e.cycle.size(); ++i) {
            bool found = false;
            for (const AdjEntry& a : zero.out[e.cycle[i]])
                if (a.to == e.cycle[i + 1]) {
                    w += a.weight;
                    found = true;
                    break;
                }
            CHECK(found);
        }
        CHECK(w == 0);
    }

    WeightedGraph clean = parse_graph(std::string("directed 3 3\n0 1 2\n1 2 -1\n0 2 4\n"));
    CHECK_NOTHROW(assert_no_zero_cycle(clean, johnson_potentials(clean)));
}

TEST_CASE("tight dag holds exactly the tight arcs in topological order") {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 25; ++it) {
        int n = 3 + static_cast<int>(rng() % 6);
        WeightedGraph g = gen_random(n, 1 + static_cast<int>(rng() % (n * (n - 1))), 1, 5,
                                     GraphKind::Directed, rng());
        DistanceMatrix D = apsp(g);
        int x = static_cast<int>(rng() % n);
        TightDag H = tight_dag(g, D, x, DagDirection::OutOf);
        size_t count = 0;
        for (const auto& lst : H.succ) count += lst.size();
        size_t expect = 0;
        for (int e = 0; e < g.m(); ++e) {
            const Arc& a = g.arcs[e];
            bool tight = D.reachable(x, a.tail) && D.dist(x, a.tail) + a.weight == D.dist(x, a.head);
            if (tight) ++expect;
            CHECK(edge_on_sp(D, g, x, e, a.head) ==
                  (D.reachable(x, a.tail) && D.dist(x, a.tail) + a.weight == D.dist(x, a.head)));
        }
        CHECK(count == expect);
        for (int v = 0; v < n; ++v)
            for (const AdjEntry& e : H.succ[v]) CHECK(H.topo_index[v] < H.topo_index[e.to]);
    }
}

TEST_CASE("vertex membership on shortest paths") {
    WeightedGraph g = parse_graph(std::string("directed 4 4\n0 1 1\n1 3 1\n0 2 1\n2 3 2\n"));
    DistanceMatrix D = apsp(g);
    CHECK(vertex_on_sp(D, 0, 1, 3));
    CHECK_FALSE(vertex_on_sp(D, 0, 2, 3));
    CHECK(vertex_on_sp(D, 0, 0, 3));
    CHECK(vertex_on_sp(D, 0, 3, 3));
}
