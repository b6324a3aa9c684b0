#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsp/validate.hpp"

using namespace dsp;

TEST_CASE("walk weight follows arcs, both directions when undirected") {
    WeightedGraph g = parse_graph(std::string("directed 3 2\n0 1 2\n1 2 3\n"));
    CHECK(walk_weight(g, {0, 1, 2}) == 5);
    CHECK_FALSE(walk_weight(g, {2, 1, 0}).has_value());
    CHECK(walk_weight(g, {1}) == 0);

    WeightedGraph u = parse_graph(std::string("undirected 3 2\n0 1 2\n1 2 3\n"));
    CHECK(walk_weight(u, {2, 1, 0}) == 5);
}

TEST_CASE("simplicity and sharing") {
    CHECK(is_simple_seq({0, 1, 2}));
    CHECK_FALSE(is_simple_seq({0, 1, 0}));
    CHECK(shared_vertex_count({0, 1, 2}, {3, 1, 0}) == 2);
    CHECK(shared_vertex_count({0, 1}, {2, 3}) == 0);
}

TEST_CASE("internal disjointness honors shared query endpoints") {
    Query q{0, 3, 0, 4};
    CHECK(internally_disjoint_seqs({0, 1, 3}, {0, 2, 4}, q));       // share only 0
    CHECK_FALSE(internally_disjoint_seqs({0, 1, 3}, {0, 1, 4}, q)); // share 1 too
    Query r{0, 3, 4, 5};
    CHECK_FALSE(internally_disjoint_seqs({0, 1, 3}, {4, 0, 5}, r)); // 0 not common endpoint
}

TEST_CASE("full pair validation") {
    WeightedGraph g = parse_graph(
        std::string("directed 6 6\n0 2 1\n2 1 1\n3 4 1\n4 5 1\n0 1 2\n3 5 2\n"));
    Query q{0, 1, 3, 5};
    CHECK(valid_pair(g, q, {0, 2, 1}, {3, 4, 5}, 2, 2));
    CHECK(valid_pair(g, q, {0, 2, 1}, {3, 4, 5}, 2, 2, 0));
    CHECK_FALSE(valid_pair(g, q, {0, 2, 1}, {3, 4, 5}, 2, 2, 1));  // wrong overlap count
    CHECK_FALSE(valid_pair(g, q, {0, 2, 1}, {3, 4, 5}, 1, 2));     // wrong distance
    CHECK_FALSE(valid_pair(g, q, {0, 2, 1}, {4, 5}, 2, 1));        // wrong endpoint
}
