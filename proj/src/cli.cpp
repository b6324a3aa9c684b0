#include "dsp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "dsp/dsp2.hpp"
#include "dsp/min2dsp.hpp"
#include "dsp/oracle.hpp"
#include "dsp/suites.hpp"
#include "dsp/validate.hpp"

namespace dsp {

namespace {

constexpr uint64_t kDefaultSeed = 0xD5A11CE5EEDULL;

WeightedGraph load_graph(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw InputError("cannot open graph file: " + path);
    return parse_graph(is);
}

void check_terminals(const WeightedGraph& g, const Query& q) {
    for (int v : {q.s1, q.t1, q.s2, q.t2})
        if (v < 0 || v >= g.n)
            throw IndexOutOfRange("terminal " + std::to_string(v) + " outside [0, " +
                                  std::to_string(g.n) + ")");
}

void print_path(std::ostream& out, const char* tag, const std::vector<int>& p) {
    out << tag;
    for (int v : p) out << " " << v;
    out << "\n";
}

// shortest distances of the two query pairs, by graph shape
std::pair<int64_t, int64_t> query_dists(const WeightedGraph& g, const Query& q) {
    std::vector<int64_t> r1, r2;
    if (!g.directed()) {
        r1 = sssp_from(g, q.s1);
        r2 = sssp_from(g, q.s2);
    } else if (is_dag(g)) {
        r1 = dag_sssp_from(g, q.s1);
        r2 = dag_sssp_from(g, q.s2);
    } else {
        auto pot = johnson_potentials(g);
        r1 = sssp_from(g, q.s1, pot);
        r2 = sssp_from(g, q.s2, pot);
    }
    return {r1[q.t1], r2[q.t2]};
}

void emit_witness(std::ostream& out, const WeightedGraph& g, const Query& q,
                  const std::vector<int>& p1, const std::vector<int>& p2, int expected_k) {
    auto [d1, d2] = query_dists(g, q);
    if (!valid_pair(g, q, p1, p2, d1, d2, expected_k))
        throw InternalError("computed witness failed revalidation");
    print_path(out, "PATH1", p1);
    print_path(out, "PATH2", p2);
}

int cmd_dsp2(const std::string& file, const Query& q, uint64_t seed, int trials, bool report,
             std::ostream& out) {
    WeightedGraph g = load_graph(file);
    check_terminals(g, q);
    out << "SOLVER dsp2\nSEED " << seed << "\nTRIALS " << trials << "\n";
    bool verdict = dsp2_decide(g, q, seed, trials);
    out << "DISJOINT " << (verdict ? "true" : "false") << "\n";
    if (verdict && report) {
        std::optional<std::pair<std::vector<int>, std::vector<int>>> rep;
        for (int retry = 0; retry < 5 && !rep; ++retry) {
            try {
                rep = dsp2_report(g, q, seed + retry);
            } catch (const ReportingFailed&) {
            }
        }
        if (!rep) throw InternalError("path reporting failed across retries");
        auto [d1, d2] = query_dists(g, q);
        if (!valid_pair(g, q, rep->first, rep->second, d1, d2) ||
            !internally_disjoint_seqs(rep->first, rep->second, q))
            throw InternalError("computed witness failed revalidation");
        print_path(out, "PATH1", rep->first);
        print_path(out, "PATH2", rep->second);
    }
    return verdict ? 0 : 1;
}

int cmd_min2dsp(const std::string& file, const Query& q, uint64_t seed, int trials,
                bool force_large, std::ostream& out) {
    WeightedGraph g = load_graph(file);
    check_terminals(g, q);
    Min2Result res{-1, std::nullopt};
    const char* solver;
    if (!g.directed()) {
        solver = "min2dsp_undirected";
        res = min2dsp_solve_undirected(g, q, seed, trials);
    } else if (is_dag(g)) {
        solver = "min2dsp_dag";
        res = min2dsp_solve_dag(g, q, seed, trials);
    } else {
        solver = "min2dsp_directed";
        res = min2dsp_min_k(g, q, seed, force_large, trials);
    }
    out << "SOLVER " << solver << "\nSEED " << seed << "\nTRIALS " << trials << "\n";
    out << "MIN_INTERSECTIONS " << res.k << "\n";
    if (res.paths) emit_witness(out, g, q, res.paths->first, res.paths->second, res.k);
    return 0;
}

int cmd_oracle(const std::string& mode, const std::string& file, const Query& q, int cap,
               std::ostream& out) {
    WeightedGraph g = load_graph(file);
    check_terminals(g, q);
    oracle::MinIntersection mi;
    try {
        mi = oracle::min_intersection(g, q, cap);
    } catch (const CapExceeded&) {
        throw CapExceeded("path enumeration exceeded the cap of " + std::to_string(cap) +
                          "; shrink the instance or raise --cap");
    }
    out << "SOLVER oracle\n";
    if (mode == "dsp2") {
        out << "DISJOINT " << (mi.disjoint_exists ? "true" : "false") << "\n";
        return mi.disjoint_exists ? 0 : 1;
    }
    out << "MIN_INTERSECTIONS " << mi.min_overall << "\n";
    if (mi.min_overall >= 0) {
        print_path(out, "PATH1", mi.witness1.verts);
        print_path(out, "PATH2", mi.witness2.verts);
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"shortest-path disjointness solvers"};
    app.require_subcommand(1);

    uint64_t seed = kDefaultSeed;
    int trials = 1;
    std::string file;
    std::vector<int> terms;
    int result = 0;

    auto add_query = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file")->required();
        cmd->add_option("terminals", terms, "s1 t1 s2 t2")->expected(4)->required();
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--trials", trials, "decision trials")->check(CLI::PositiveNumber);
    };
    auto query = [&] { return Query{terms[0], terms[1], terms[2], terms[3]}; };

    bool report = false;
    CLI::App* dsp2 = app.add_subcommand("dsp2", "decide two disjoint shortest paths");
    add_query(dsp2);
    dsp2->add_flag("--report", report, "also print a disjoint pair when one exists");
    dsp2->callback([&] { result = cmd_dsp2(file, query(), seed, trials, report, out); });

    bool force_large = false;
    CLI::App* min2 = app.add_subcommand("min2dsp", "minimize shortest-path intersections");
    add_query(min2);
    min2->add_flag("--force-large", force_large,
                   "run the exact directed solver past its size cap");
    min2->callback(
        [&] { result = cmd_min2dsp(file, query(), seed, trials, force_large, out); });

    std::string mode;
    int cap = oracle::kDefaultPathCap;
    CLI::App* orc = app.add_subcommand("oracle", "exhaustive reference solver");
    orc->add_option("mode", mode, "dsp2 or min2dsp")
        ->required()
        ->check(CLI::IsMember({"dsp2", "min2dsp"}));
    add_query(orc);
    orc->add_option("--cap", cap, "path enumeration cap")->check(CLI::PositiveNumber);
    orc->callback([&] { result = cmd_oracle(mode, file, query(), cap, out); });

    int gn = 0, gm = 0;
    int64_t wmin = 1, wmax = 8;
    std::string kind, outfile;
    CLI::App* gen = app.add_subcommand("gen", "write a random graph");
    gen->add_option("n", gn, "vertex count")->required();
    gen->add_option("m", gm, "edge count")->required();
    gen->add_option("wmin", wmin, "minimum weight")->required();
    gen->add_option("wmax", wmax, "maximum weight")->required();
    gen->add_option("kind", kind, "directed or undirected")
        ->required()
        ->check(CLI::IsMember({"directed", "undirected"}));
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--output", outfile, "output file (default stdout)");
    gen->callback([&] {
        GraphKind k = kind == "directed" ? GraphKind::Directed : GraphKind::Undirected;
        std::string text = serialize_graph(gen_random(gn, gm, wmin, wmax, k, seed));
        if (outfile.empty()) {
            out << text;
        } else {
            std::ofstream os(outfile);
            if (!os) throw InputError("cannot write to " + outfile);
            os << text;
        }
    });

    bool full = false;
    CLI::App* st = app.add_subcommand("selftest", "run the acceptance suites");
    st->add_option("--seed", seed, "suite seed");
    st->add_flag("--full", full, "full instance counts instead of the reduced ones");
    st->callback([&] {
        suites::SuiteConfig cfg = full ? suites::full_config() : suites::reduced_config();
        cfg.seed = seed;
        auto results = suites::run_all(cfg, &out);
        bool all = std::all_of(results.begin(), results.end(),
                               [](const suites::CriterionResult& r) { return r.passed; });
        out << "SELFTEST " << (all ? "PASS" : "FAIL") << "\n";
        result = all ? 0 : 3;
    });

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    return result;
}

}  // namespace dsp
