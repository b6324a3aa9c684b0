#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsp/graph.hpp"

using namespace dsp;

TEST_CASE("parse and serialize round trip") {
    std::string text =
        "# comment\n"
        "directed 3 2\n"
        "0 1 5\n"
        "\n"
        "1 2 -4\n";
    WeightedGraph g = parse_graph(text);
    CHECK(g.directed());
    CHECK(g.n == 3);
    CHECK(g.m() == 2);
    CHECK(g.arcs[1].weight == -4);
    WeightedGraph again = parse_graph(serialize_graph(g));
    CHECK(serialize_graph(again) == serialize_graph(g));
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_graph(std::string("")), MalformedHeader);
    CHECK_THROWS_AS(parse_graph(std::string("triangulated 2 1\n0 1 1\n")), MalformedHeader);
    CHECK_THROWS_AS(parse_graph(std::string("directed 2 2\n0 1 1\n")), MalformedHeader);
    CHECK_THROWS_AS(parse_graph(std::string("directed 2 1\n0 1 1 9\n")), MalformedHeader);
    CHECK_THROWS_AS(parse_graph(std::string("directed 2 1\n0 2 1\n")), IndexOutOfRange);
    CHECK_THROWS_AS(parse_graph(std::string("directed 2 1\n1 1 1\n")), SelfLoop);
    CHECK_THROWS_AS(parse_graph(std::string("directed 2 2\n0 1 1\n0 1 2\n")), DuplicateEdge);
    CHECK_THROWS_AS(parse_graph(std::string("undirected 2 2\n0 1 1\n1 0 2\n")), DuplicateEdge);
    CHECK_THROWS_AS(parse_graph(std::string("undirected 2 1\n0 1 0\n")),
                    NonPositiveUndirectedWeight);
}

TEST_CASE("undirected adjacency carries both orientations under one edge id") {
    WeightedGraph g = parse_graph(std::string("undirected 3 2\n0 1 2\n1 2 3\n"));
    REQUIRE(g.out[1].size() == 2);
    CHECK(g.out[0].size() == 1);
    CHECK(g.out[0][0].edge == 0);
    CHECK(g.in[0].size() == 1);
}

TEST_CASE("bidirect produces the two-arc directed version") {
    WeightedGraph g = parse_graph(std::string("undirected 3 2\n0 1 2\n1 2 3\n"));
    WeightedGraph d = bidirect(g);
    CHECK(d.directed());
    CHECK(d.m() == 4);
    for (int i = 0; i < g.m(); ++i) {
        CHECK(d.arcs[i].tail == g.arcs[i].tail);
        CHECK(d.arcs[g.m() + i].tail == g.arcs[i].head);
        CHECK(d.arcs[g.m() + i].head == g.arcs[i].tail);
        CHECK(d.arcs[g.m() + i].weight == g.arcs[i].weight);
    }
    CHECK_THROWS_AS(bidirect(d), KindMismatch);
}

TEST_CASE("gen_random is deterministic and honors the edge count") {
    WeightedGraph a = gen_random(12, 30, 1, 9, GraphKind::Directed, 77);
    WeightedGraph b = gen_random(12, 30, 1, 9, GraphKind::Directed, 77);
    CHECK(serialize_graph(a) == serialize_graph(b));
    CHECK(a.m() == 30);
    for (const Arc& arc : a.arcs) {
        CHECK(arc.weight >= 1);
        CHECK(arc.weight <= 9);
    }
    WeightedGraph c = gen_random(12, 30, 1, 9, GraphKind::Directed, 78);
    CHECK(serialize_graph(a) != serialize_graph(c));
    CHECK_THROWS_AS(gen_random(3, 7, 1, 2, GraphKind::Directed, 1), InfeasibleEdgeCount);
    CHECK_THROWS_AS(gen_random(4, 2, 0, 2, GraphKind::Undirected, 1),
                    NonPositiveUndirectedWeight);
}

TEST_CASE("is_dag") {
    CHECK(is_dag(parse_graph(std::string("directed 3 2\n0 1 1\n1 2 1\n"))));
    CHECK_FALSE(is_dag(parse_graph(std::string("directed 2 2\n0 1 1\n1 0 1\n"))));
    CHECK_FALSE(is_dag(parse_graph(std::string("undirected 2 1\n0 1 1\n"))));
}
