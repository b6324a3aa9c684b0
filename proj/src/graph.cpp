#include "dsp/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

namespace dsp {

namespace {

int64_t pair_key(int u, int v, int n) {
    return static_cast<int64_t>(u) * n + v;
}

void validate_arc(const WeightedGraph& g, const Arc& a, const std::string& where,
                  std::unordered_set<int64_t>& seen) {
    if (a.tail < 0 || a.tail >= g.n || a.head < 0 || a.head >= g.n)
        throw IndexOutOfRange("vertex id out of range at " + where);
    if (a.tail == a.head) throw SelfLoop("self-loop at " + where);
    int64_t key = g.kind == GraphKind::Directed
                      ? pair_key(a.tail, a.head, g.n)
                      : pair_key(std::min(a.tail, a.head), std::max(a.tail, a.head), g.n);
    if (!seen.insert(key).second) throw DuplicateEdge("duplicate edge at " + where);
    if (g.kind == GraphKind::Undirected && a.weight <= 0)
        throw NonPositiveUndirectedWeight("non-positive undirected weight at " + where);
}

}  // namespace

void WeightedGraph::finalize() {
    std::unordered_set<int64_t> seen;
    seen.reserve(arcs.size() * 2);
    out.assign(n, {});
    in.assign(n, {});
    for (size_t i = 0; i < arcs.size(); ++i) {
        const Arc& a = arcs[i];
        validate_arc(*this, a, "edge " + std::to_string(i), seen);
        int id = static_cast<int>(i);
        out[a.tail].push_back({a.head, a.weight, id});
        in[a.head].push_back({a.tail, a.weight, id});
        if (kind == GraphKind::Undirected) {
            out[a.head].push_back({a.tail, a.weight, id});
            in[a.tail].push_back({a.head, a.weight, id});
        }
    }
}

WeightedGraph parse_graph(std::istream& is) {
    WeightedGraph g;
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& dst) -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            dst = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_line(header)) throw MalformedHeader("missing header line");
    std::istringstream hs(header);
    std::string kind;
    long long n = -1, m = -1;
    if (!(hs >> kind >> n >> m) || (kind != "directed" && kind != "undirected") || n < 0 ||
        m < 0) {
        throw MalformedHeader("bad header at line " + std::to_string(lineno));
    }
    std::string rest;
    if (hs >> rest) throw MalformedHeader("trailing tokens at line " + std::to_string(lineno));
    g.kind = kind == "directed" ? GraphKind::Directed : GraphKind::Undirected;
    g.n = static_cast<int>(n);

    std::unordered_set<int64_t> seen;
    seen.reserve(static_cast<size_t>(m) * 2);
    for (long long i = 0; i < m; ++i) {
        std::string row;
        if (!next_line(row))
            throw MalformedHeader("expected " + std::to_string(m) + " edges, got " +
                                  std::to_string(i));
        std::istringstream rs(row);
        Arc a{};
        if (!(rs >> a.tail >> a.head >> a.weight))
            throw MalformedHeader("bad edge at line " + std::to_string(lineno));
        if (rs >> rest) throw MalformedHeader("trailing tokens at line " + std::to_string(lineno));
        validate_arc(g, a, "line " + std::to_string(lineno), seen);
        g.arcs.push_back(a);
    }
    g.finalize();
    return g;
}

WeightedGraph parse_graph(const std::string& text) {
    std::istringstream is(text);
    return parse_graph(is);
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream os;
    os << (g.directed() ? "directed" : "undirected") << ' ' << g.n << ' ' << g.m() << '\n';
    for (const Arc& a : g.arcs) os << a.tail << ' ' << a.head << ' ' << a.weight << '\n';
    return os.str();
}

WeightedGraph bidirect(const WeightedGraph& g) {
    if (g.directed()) throw KindMismatch("bidirect expects an undirected graph");
    WeightedGraph d;
    d.kind = GraphKind::Directed;
    d.n = g.n;
    d.arcs = g.arcs;
    for (const Arc& a : g.arcs) d.arcs.push_back({a.head, a.tail, a.weight});
    d.finalize();
    return d;
}

WeightedGraph gen_random(int n, int m, int64_t wmin, int64_t wmax, GraphKind kind,
                         uint64_t seed) {
    if (n < 0 || m < 0 || wmin > wmax) throw InputError("bad generator arguments");
    if (kind == GraphKind::Undirected && wmin <= 0)
        throw NonPositiveUndirectedWeight("undirected weights must be positive");
    int64_t total = kind == GraphKind::Directed
                        ? static_cast<int64_t>(n) * (n - 1)
                        : static_cast<int64_t>(n) * (n - 1) / 2;
    if (m > total) throw InfeasibleEdgeCount("m exceeds simple edge capacity");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int64_t> wdist(wmin, wmax);
    WeightedGraph g;
    g.kind = kind;
    g.n = n;

    if (total <= 4'000'000) {
        // enumerate all candidate pairs and take a random m-subset
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(static_cast<size_t>(total));
        for (int u = 0; u < n; ++u)
            for (int v = (kind == GraphKind::Directed ? 0 : u + 1); v < n; ++v)
                if (u != v) pairs.emplace_back(u, v);
        for (int i = 0; i < m; ++i) {
            std::uniform_int_distribution<size_t> pick(i, pairs.size() - 1);
            std::swap(pairs[i], pairs[pick(rng)]);
        }
        pairs.resize(m);
        for (auto [u, v] : pairs) g.arcs.push_back({u, v, wdist(rng)});
    } else {
        std::unordered_set<int64_t> used;
        used.reserve(static_cast<size_t>(m) * 2);
        std::uniform_int_distribution<int> vdist(0, n - 1);
        while (static_cast<int>(g.arcs.size()) < m) {
            int u = vdist(rng), v = vdist(rng);
            if (u == v) continue;
            if (kind == GraphKind::Undirected && u > v) std::swap(u, v);
            if (!used.insert(pair_key(u, v, n)).second) continue;
            g.arcs.push_back({u, v, wdist(rng)});
        }
    }
    g.finalize();
    return g;
}

bool is_dag(const WeightedGraph& g) {
    if (!g.directed()) return false;
    std::vector<int> indeg(g.n, 0);
    for (const Arc& a : g.arcs) ++indeg[a.head];
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++seen;
        for (const AdjEntry& e : g.out[v])
            if (--indeg[e.to] == 0) stack.push_back(e.to);
    }
    return seen == g.n;
}

}  // namespace dsp
