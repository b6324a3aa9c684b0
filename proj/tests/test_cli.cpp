#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dsp/cli.hpp"
#include "dsp/graph.hpp"

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dsp::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string write_tmp(const std::string& name, const std::string& content) {
    std::string path = "cli_fixture_" + name + ".txt";
    std::ofstream os(path);
    os << content;
    return path;
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("dsp2 verdicts and exit codes") {
    std::string disjoint = write_tmp(
        "disjoint", "directed 6 4\n0 2 1\n2 1 1\n3 4 1\n4 5 1\n");
    std::string bridge = write_tmp(
        "bridge", "directed 7 6\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n0 1 3\n2 3 3\n");

    Run pos = cli({"dsp2", disjoint, "0", "1", "3", "5"});
    CHECK(pos.code == 0);
    CHECK(contains(pos.out, "DISJOINT true"));
    CHECK_FALSE(contains(pos.out, "PATH1"));

    Run rep = cli({"dsp2", disjoint, "0", "1", "3", "5", "--report"});
    CHECK(rep.code == 0);
    CHECK(contains(rep.out, "PATH1 0 2 1"));
    CHECK(contains(rep.out, "PATH2 3 4 5"));

    Run neg = cli({"dsp2", bridge, "0", "1", "2", "3"});
    CHECK(neg.code == 1);
    CHECK(contains(neg.out, "DISJOINT false"));
}

TEST_CASE("identical invocations produce identical bytes") {
    std::string disjoint = write_tmp(
        "det", "directed 6 4\n0 2 1\n2 1 1\n3 4 1\n4 5 1\n");
    Run a = cli({"dsp2", disjoint, "0", "1", "3", "5", "--report", "--seed", "9"});
    Run b = cli({"dsp2", disjoint, "0", "1", "3", "5", "--report", "--seed", "9"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
}

TEST_CASE("min2dsp dispatches by graph shape and prints witnesses") {
    std::string corridor = write_tmp(
        "corridor", "directed 7 7\n0 2 1\n1 2 1\n2 3 1\n3 4 1\n4 5 1\n4 6 1\n0 5 9\n");
    Run dag = cli({"min2dsp", corridor, "0", "5", "1", "6"});
    CHECK(dag.code == 0);
    CHECK(contains(dag.out, "SOLVER min2dsp_dag"));
    CHECK(contains(dag.out, "MIN_INTERSECTIONS 3"));
    CHECK(contains(dag.out, "PATH1"));
    CHECK(contains(dag.out, "PATH2"));

    std::string star = write_tmp("star", "undirected 5 4\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n");
    Run und = cli({"min2dsp", star, "0", "1", "2", "3"});
    CHECK(und.code == 0);
    CHECK(contains(und.out, "SOLVER min2dsp_undirected"));
    CHECK(contains(und.out, "MIN_INTERSECTIONS 1"));
    CHECK(contains(und.out, "PATH1"));

    // general directed graphs report no witness
    std::string cyc = write_tmp(
        "cyc", "directed 7 7\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n0 1 3\n2 3 3\n1 0 9\n");
    Run dir = cli({"min2dsp", cyc, "0", "1", "2", "3"});
    CHECK(dir.code == 0);
    CHECK(contains(dir.out, "SOLVER min2dsp_directed"));
    CHECK(contains(dir.out, "MIN_INTERSECTIONS 1"));
    CHECK_FALSE(contains(dir.out, "PATH1"));
}

TEST_CASE("size cap yields an input error without --force-large") {
    std::string big = write_tmp("big", dsp::serialize_graph(dsp::gen_random(
                                           70, 300, 1, 5, dsp::GraphKind::Directed, 3)));
    Run r = cli({"min2dsp", big, "0", "1", "2", "3"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("oracle mirrors the solvers") {
    std::string bridge = write_tmp(
        "obridge", "directed 7 6\n0 4 1\n4 1 1\n2 4 1\n4 3 1\n0 1 3\n2 3 3\n");
    Run od = cli({"oracle", "dsp2", bridge, "0", "1", "2", "3"});
    CHECK(od.code == 1);
    CHECK(contains(od.out, "DISJOINT false"));

    Run om = cli({"oracle", "min2dsp", bridge, "0", "1", "2", "3"});
    CHECK(om.code == 0);
    CHECK(contains(om.out, "MIN_INTERSECTIONS 1"));
    CHECK(contains(om.out, "PATH1"));
}

TEST_CASE("gen emits parseable deterministic graphs") {
    Run a = cli({"gen", "10", "20", "1", "9", "directed", "--seed", "5"});
    Run b = cli({"gen", "10", "20", "1", "9", "directed", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    dsp::WeightedGraph g = dsp::parse_graph(a.out);
    CHECK(g.n == 10);
    CHECK(g.m() == 20);
}

TEST_CASE("usage and input errors exit with code 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"dsp2", "no_such_file.txt", "0", "1", "2", "3"}).code == 2);

    std::string bad = write_tmp("bad", "directed 2 2\n0 1 1\n");
    Run r = cli({"dsp2", bad, "0", "1", "0", "1"});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error"));

    std::string ok = write_tmp("range", "directed 3 2\n0 1 1\n1 2 1\n");
    CHECK(cli({"dsp2", ok, "0", "9", "1", "2"}).code == 2);
    CHECK(cli({"gen", "3", "99", "1", "2", "directed"}).code == 2);
}
