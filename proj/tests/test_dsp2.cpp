#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dsp/dsp2.hpp"
#include "dsp/oracle.hpp"
#include "dsp/validate.hpp"

using namespace dsp;

namespace {

struct Inst {
    WeightedGraph g;
    DistanceMatrix D;
    Query q;
};

// random positive directed instance with both pairs reachable and the
// terminal pairs not identical
Inst make(std::mt19937_64& rng, int nmax) {
    for (;;) {
        int n = 2 + static_cast<int>(rng() % (nmax - 1));
        int m = 1 + static_cast<int>(rng() % (n * (n - 1)));
        Inst inst{gen_random(n, m, 1, 8, GraphKind::Directed, rng()), {}, {}};
        inst.D = apsp(inst.g);
        std::vector<std::pair<int, int>> pairs;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && inst.D.reachable(x, y)) pairs.push_back({x, y});
        if (pairs.size() < 2) continue;
        auto [s1, t1] = pairs[rng() % pairs.size()];
        auto [s2, t2] = pairs[rng() % pairs.size()];
        if (s1 == s2 && t1 == t2) continue;
        inst.q = Query{s1, t1, s2, t2};
        return inst;
    }
}

}  // namespace

TEST_CASE("grouped and naive evaluations agree") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 80; ++it) {
        Inst inst = make(rng, 9);
        EdgeAssignment za = sample_assignment(inst.g.m(), rng());
        CHECK(dsp2_fdisj_value(inst.g, inst.D, za, inst.q, true) ==
              dsp2_fdisj_value(inst.g, inst.D, za, inst.q, false));
    }
}

TEST_CASE("decision matches the oracle") {
    std::mt19937_64 rng(32);
    int done = 0;
    while (done < 60) {
        Inst inst = make(rng, 8);
        oracle::MinIntersection mi;
        try {
            mi = oracle::min_intersection(inst.g, inst.q, oracle::kDefaultPathCap);
        } catch (const CapExceeded&) {
            continue;
        }
        CHECK(dsp2_decide(inst.g, inst.q, rng()) == mi.disjoint_exists);
        ++done;
    }
}

TEST_CASE("reporting returns validated disjoint pairs") {
    std::mt19937_64 rng(33);
    int done = 0;
    while (done < 40) {
        Inst inst = make(rng, 8);
        oracle::MinIntersection mi;
        try {
            mi = oracle::min_intersection(inst.g, inst.q, oracle::kDefaultPathCap);
        } catch (const CapExceeded&) {
            continue;
        }
        if (!mi.disjoint_exists) continue;
        std::optional<std::pair<std::vector<int>, std::vector<int>>> rep;
        for (int retry = 0; retry < 5 && !rep; ++retry) {
            try {
                rep = dsp2_report(inst.g, inst.q, rng());
            } catch (const ReportingFailed&) {
            }
        }
        REQUIRE(rep.has_value());
        int64_t d1 = inst.D.dist(inst.q.s1, inst.q.t1);
        int64_t d2 = inst.D.dist(inst.q.s2, inst.q.t2);
        CHECK(valid_pair(inst.g, inst.q, rep->first, rep->second, d1, d2));
        CHECK(internally_disjoint_seqs(rep->first, rep->second, inst.q));
        ++done;
    }
}

TEST_CASE("reporting is empty exactly on negative instances") {
    WeightedGraph g = parse_graph(
        std::string("directed 7 6\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n0 1 3\n2 3 3\n"));
    CHECK_FALSE(dsp2_decide(g, Query{0, 1, 2, 3}, 17));
    CHECK_FALSE(dsp2_report(g, Query{0, 1, 2, 3}, 17).has_value());
}

TEST_CASE("input guards") {
    WeightedGraph u = parse_graph(std::string("undirected 2 1\n0 1 1\n"));
    CHECK_THROWS_AS(dsp2_decide(u, Query{0, 1, 1, 0}, 1), KindMismatch);

    WeightedGraph zero = parse_graph(std::string("directed 3 3\n0 1 1\n1 0 -1\n0 2 1\n"));
    CHECK_THROWS_AS(dsp2_decide(zero, Query{0, 2, 0, 2}, 1), ZeroCycle);

    WeightedGraph neg = parse_graph(std::string("directed 3 3\n0 1 1\n1 0 -2\n0 2 1\n"));
    CHECK_THROWS_AS(dsp2_decide(neg, Query{0, 2, 0, 2}, 1), NegativeCycle);

    WeightedGraph chain = parse_graph(std::string("directed 3 1\n0 1 1\n"));
    CHECK_THROWS_AS(dsp2_decide(chain, Query{0, 1, 0, 2}, 1), UnreachableTerminal);
}

TEST_CASE("negative weights without nonpositive cycles work") {
    // two parallel corridors where negative arcs decide the shortest routes
    WeightedGraph g = parse_graph(std::string(
        "directed 6 6\n0 2 2\n2 1 -1\n0 1 5\n3 4 2\n4 5 -1\n3 5 5\n"));
    CHECK(dsp2_decide(g, Query{0, 1, 3, 5}, 23));
    auto rep = dsp2_report(g, Query{0, 1, 3, 5}, 23);
    REQUIRE(rep.has_value());
    CHECK(rep->first == std::vector<int>{0, 2, 1});
    CHECK(rep->second == std::vector<int>{3, 4, 5});
}
