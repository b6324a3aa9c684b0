#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsp/enum_poly.hpp"
#include "dsp/oracle.hpp"

using namespace dsp;

TEST_CASE("assignments are per-seed deterministic") {
    EdgeAssignment a = sample_assignment(20, 3), b = sample_assignment(20, 3);
    EdgeAssignment c = sample_assignment(20, 4);
    REQUIRE(a.z.size() == 20);
    bool differ = false;
    for (int i = 0; i < 20; ++i) {
        CHECK(a[i] == b[i]);
        if (a[i] != c[i]) differ = true;
    }
    CHECK(differ);
}

TEST_CASE("F on a diamond sums both path monomials") {
    WeightedGraph g = parse_graph(std::string("directed 4 4\n0 1 1\n1 3 1\n0 2 1\n2 3 1\n"));
    DistanceMatrix D = apsp(g);
    EdgeAssignment za = sample_assignment(g.m(), 8);
    FBar F = eval_F(g, D, za, {0});
    CHECK(F.at(0, 0) == GF64::one());
    CHECK(F.at(0, 3) == za[0] * za[1] + za[2] * za[3]);
    CHECK(F.at(0, 1) == za[0]);
}

TEST_CASE("evaluated F matches the symbolic oracle") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 6);
        bool undirected = it % 4 == 0;
        WeightedGraph g = gen_random(
            n, 1 + static_cast<int>(rng() % std::max(1, undirected ? n * (n - 1) / 2 : n * (n - 1))),
            1, 5, undirected ? GraphKind::Undirected : GraphKind::Directed, rng());
        DistanceMatrix D = apsp(g);
        EdgeAssignment za = sample_assignment(g.m(), rng());
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        FBar F = eval_F(g, D, za, all);
        FBar Fr = eval_F_rev(g, D, za, all);
        for (int x = 0; x < n; ++x) {
            auto row = eval_F_row(g, sssp_from(g, x), za, x);
            auto col = eval_F_col(g, sssp_to(g, x), za, x);
            for (int y = 0; y < n; ++y) {
                GF64 sym = oracle::symbolic_F(g, D, x, y, oracle::kDefaultPathCap).eval(za);
                CHECK(F.at(x, y) == sym);
                CHECK(Fr.at(y, x) == sym);
                CHECK(row[y] == sym);
                CHECK(col[y] ==
                      oracle::symbolic_F(g, D, y, x, oracle::kDefaultPathCap).eval(za));
            }
        }
    }
}

TEST_CASE("undirected F is symmetric") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 20; ++it) {
        int n = 3 + static_cast<int>(rng() % 5);
        WeightedGraph g = gen_random(n, 1 + static_cast<int>(rng() % (n * (n - 1) / 2)), 1, 5,
                                     GraphKind::Undirected, rng());
        DistanceMatrix D = apsp(g);
        EdgeAssignment za = sample_assignment(g.m(), rng());
        std::vector<int> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        FBar F = eval_F(g, D, za, all);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) CHECK(F.at(x, y) == F.at(y, x));
    }
}
