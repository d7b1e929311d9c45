#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rignac/colouring.hpp"
#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/gsc.hpp"

namespace rignac {

/// Knuth's MMIX linear congruential generator; identical streams everywhere.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 33;
    }
    /// Value in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
    std::uint64_t state_;
};

inline Graph make_path(int n) {
    if (n < 1) throw PreconditionError("path needs at least one vertex");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return Graph(n, std::move(es));
}

inline Graph make_cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least three vertices");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    es.push_back({0, n - 1});
    return Graph(n, std::move(es));
}

inline Graph make_complete(int n) {
    if (n < 1) throw PreconditionError("complete graph needs at least one vertex");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return Graph(n, std::move(es));
}

/// Parts {0..n1-1} and {n1..n1+n2-1}.
inline Graph make_complete_bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw PreconditionError("complete bipartite sides must be nonempty");
    std::vector<Edge> es;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) es.push_back({i, n1 + j});
    return Graph(n1 + n2, std::move(es));
}

/// Random 2-tree: vertex v >= 2 is attached to an edge drawn uniformly from
/// the edges present so far, in creation order.
inline Graph make_2tree(std::uint64_t seed, int n) {
    if (n < 2) throw PreconditionError("2-tree needs at least two vertices");
    Lcg rng(seed);
    std::vector<Edge> es{{0, 1}};
    for (int v = 2; v < n; ++v) {
        Edge e = es[rng.below(es.size())];
        es.push_back({e.u, v});
        es.push_back({e.v, v});
    }
    return Graph(n, std::move(es));
}

struct LabelledGraph {
    Graph graph;
    std::vector<std::string> labels;  ///< per vertex
};

/// G_k: a_i = 2(i-1), b_i = 2i-1 for i = 1..k, then x = 2k, y = 2k+1.
inline LabelledGraph make_gk(int k) {
    if (k < 1) throw PreconditionError("G_k needs k >= 1");
    auto a = [](int i) { return 2 * (i - 1); };
    auto b = [](int i) { return 2 * i - 1; };
    const int x = 2 * k, y = 2 * k + 1;
    std::vector<Edge> es;
    for (int i = 1; i < k; ++i) {
        es.push_back({a(i), a(i + 1)});
        es.push_back({b(i), b(i + 1)});
        es.push_back({a(i), b(i + 1)});
        es.push_back({b(i), a(i + 1)});
    }
    for (auto e : {Edge{x, y}, {a(1), x}, {b(1), x}, {a(1), y}, {b(1), y}}) es.push_back(e);
    LabelledGraph out{Graph(2 * k + 2, std::move(es)), {}};
    for (int i = 1; i <= k; ++i) {
        out.labels.push_back("a" + std::to_string(i));
        out.labels.push_back("b" + std::to_string(i));
    }
    out.labels.push_back("x");
    out.labels.push_back("y");
    return out;
}

/// G'_k = G_k - {x, y}, same labels on the remaining vertices.
inline LabelledGraph make_ladder(int k) {
    auto gk = make_gk(k);
    VertexSet xy(gk.graph.vertex_count());
    xy.insert(2 * k);
    xy.insert(2 * k + 1);
    gk.labels.resize(2 * k);
    return {without_vertices(gk.graph, xy), std::move(gk.labels)};
}

/// True iff, on every window {a_i, a_{i+1}, a_{i+2}, b_i, b_{i+1}, b_{i+2}}
/// (1 <= i <= k-2), the colouring has no almost-monochromatic cycle.
inline bool locally_nac_check(const Graph& ladder, const EdgeColouring& c, int k) {
    if (k < 1 || !(ladder == make_ladder(k).graph)) throw PreconditionError("graph is not the ladder G'_k for this k");
    if (c.size() != ladder.edge_count()) throw PreconditionError("colouring length does not match the ladder");
    for (int i = 1; i + 2 <= k; ++i) {
        std::vector<int> window;
        for (int j = i; j <= i + 2; ++j) {
            window.push_back(2 * (j - 1));
            window.push_back(2 * j - 1);
        }
        std::vector<int> ids;
        for (int e = 0; e < ladder.edge_count(); ++e) {
            const auto& [u, v] = ladder.edge(e);
            if (u >= window.front() && v <= window.back()) ids.push_back(e);
        }
        auto sub = edge_subgraph(ladder, ids);
        EdgeColouring local(sub.graph.edge_count());
        for (int e = 0; e < sub.graph.edge_count(); ++e) {
            const auto& [u, v] = sub.graph.edge(e);
            local.set_red(e, c.red(*ladder.edge_index(sub.original[u], sub.original[v])));
        }
        if (has_almost_monochromatic_cycle(sub.graph, local)) return false;
    }
    return true;
}

/// One scripted gluing step; new vertex ids are assigned in order.
struct GscScriptStep {
    GscPiece piece = GscPiece::Triangle;
    GscGlue glue = GscGlue::Edge;
    PrismEdgeRole role = PrismEdgeRole::None;
    std::vector<int> at;
};

/// Decomposition for a script over the base edge 0-1.
inline GscDecomposition gsc_from_script(const std::vector<GscScriptStep>& script) {
    GscDecomposition d;
    d.base = {0, 1};
    int next = 2;
    for (const auto& s : script) {
        GscStep step{s.piece, s.glue, s.role, s.at, {}};
        if (s.piece == GscPiece::Prism && s.glue == GscGlue::Edge && s.role == PrismEdgeRole::None)
            step.role = PrismEdgeRole::TriangleEdge;
        int fresh = s.piece == GscPiece::Triangle ? 1 : (s.glue == GscGlue::Edge ? 4 : 3);
        if (s.piece == GscPiece::Triangle && s.glue != GscGlue::Edge)
            throw PreconditionError("a triangle can only be glued along an edge");
        for (int i = 0; i < fresh; ++i) step.added.push_back(next++);
        d.prisms += s.piece == GscPiece::Prism;
        d.steps.push_back(std::move(step));
    }
    replay(d);
    return d;
}

inline Graph make_gsc(const std::vector<GscScriptStep>& script) { return replay(gsc_from_script(script)); }

/// Parses "P@0,1 T@0,2 P@2,3,4 P@0,1/rung": piece P (prism) or T (triangle),
/// glue site as two or three vertex ids, optional "/rung" for a prism whose
/// glue edge is a rung instead of a triangle edge.
inline std::vector<GscScriptStep> parse_gsc_script(std::string_view text) {
    std::vector<GscScriptStep> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        GscScriptStep s;
        auto fail = [&](const std::string& why) { throw ParseError("bad script step '" + token + "': " + why); };
        if (token.size() < 3 || token[1] != '@') fail("expected P@... or T@...");
        if (token[0] == 'P' || token[0] == 'p') s.piece = GscPiece::Prism;
        else if (token[0] != 'T' && token[0] != 't') fail("piece must be P or T");
        std::string rest = token.substr(2);
        if (auto slash = rest.find('/'); slash != std::string::npos) {
            if (rest.substr(slash + 1) != "rung") fail("unknown suffix");
            s.role = PrismEdgeRole::Rung;
            rest.resize(slash);
        }
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            auto comma = rest.find(',', pos);
            auto part = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) fail("bad vertex id");
            s.at.push_back(std::stoi(part));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (s.at.size() == 3) s.glue = GscGlue::Triangle;
        else if (s.at.size() != 2) fail("glue site needs two or three vertices");
        if (s.role == PrismEdgeRole::Rung && (s.piece != GscPiece::Prism || s.glue != GscGlue::Edge))
            fail("/rung only applies to a prism glued along an edge");
        out.push_back(std::move(s));
        token.clear();
    };
    for (char ch : text) {
        if (ch == ';' || ch == ' ' || ch == '\n' || ch == '\t') flush();
        else token += ch;
    }
    flush();
    return out;
}

/// k copies of H sharing edge e. Copy 1 keeps H's ids; later copies number
/// their other vertices consecutively after the previous ones.
inline Graph glue_along_edge(const Graph& h, int edge, int k) {
    if (k < 1) throw PreconditionError("need at least one copy");
    const int n = h.vertex_count();
    const auto [s, t] = h.edge(edge);
    std::vector<Edge> es = h.edges();
    int total = n;
    for (int copy = 1; copy < k; ++copy) {
        std::vector<int> map(n);
        for (int v = 0; v < n; ++v) map[v] = (v == s || v == t) ? v : total++;
        for (const auto& e : h.edges())
            if (!(e.u == s && e.v == t)) es.push_back({map[e.u], map[e.v]});
    }
    return Graph(total, std::move(es));
}

/// FNV-1a over the canonical edge list text.
inline std::uint64_t edge_list_checksum(const Graph& g) {
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 1099511628211ULL;
        }
    };
    feed(std::to_string(g.vertex_count()) + "\n");
    for (const auto& e : g.edges()) feed(std::to_string(e.u) + " " + std::to_string(e.v) + "\n");
    return h;
}

struct Fixture {
    std::string name;
    std::string description;
    Graph graph;
    std::uint64_t checksum;
    std::optional<std::uint64_t> nnac;  ///< value stated for this graph, when there is one
};

namespace detail {

inline Graph fixture_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> es;
    for (auto [u, v] : pairs) es.push_back({u, v});
    return Graph(n, std::move(es));
}

} // namespace detail

/// Graphs transcribed from the figures, with frozen checksums.
inline const std::vector<Fixture>& fixtures() {
    static const std::vector<Fixture> table = [] {
        using detail::fixture_graph;
        std::vector<Fixture> t;
        t.push_back({"prism", "3-prism: triangles 012 and 345 with rungs 03, 14, 25",
                     fixture_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}),
                     0x800ec377ed08d7f0ULL, 1});
        t.push_back({"k33", "K_{3,3} with parts 012 and 345", make_complete_bipartite(3, 3), 0x144c985c784336d0ULL,
                     15});
        t.push_back({"max8", "8-vertex minimally rigid graph with the most NAC-colourings",
                     fixture_graph(8, {{0, 4}, {0, 5}, {0, 7}, {1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 4}, {2, 7},
                                       {3, 6}, {4, 6}, {5, 6}, {6, 7}}),
                     0x0d556eef24ffa45aULL, 63});
        t.push_back({"max9a", "9-vertex minimally rigid graph with the most NAC-colourings (first drawing)",
                     fixture_graph(9, {{0, 1}, {0, 2}, {0, 3}, {1, 7}, {1, 8}, {2, 6}, {2, 8}, {3, 6}, {3, 7},
                                       {4, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {5, 8}}),
                     0x42e2de3f03af39ebULL, 127});
        t.push_back({"max9b", "9-vertex minimally rigid graph with the most NAC-colourings (second drawing)",
                     fixture_graph(9, {{0, 2}, {0, 5}, {0, 6}, {1, 2}, {1, 3}, {1, 4}, {2, 8}, {3, 7}, {3, 8},
                                       {4, 7}, {4, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8}}),
                     0xb22ef7c602b38e3dULL, 127});
        // Drawn with ids 0-5, 8, 9, 12, 13; compacted to 0-9 in that order.
        t.push_back({"max10", "10-vertex minimally rigid graph with the most NAC-colourings",
                     fixture_graph(10, {{0, 2}, {0, 3}, {0, 8}, {1, 2}, {1, 3}, {1, 8}, {2, 4}, {2, 5}, {3, 4},
                                        {3, 5}, {6, 4}, {6, 5}, {7, 4}, {7, 5}, {6, 9}, {7, 9}, {8, 9}}),
                     0x2172497ff92955e7ULL, std::nullopt});
        t.push_back({"max11", "11-vertex minimally rigid graph with the most NAC-colourings",
                     fixture_graph(11, {{0, 5}, {0, 6}, {1, 2}, {1, 9}, {1, 10}, {2, 7}, {2, 8}, {3, 5}, {3, 9},
                                        {3, 10}, {4, 5}, {4, 9}, {4, 10}, {6, 7}, {6, 8}, {7, 9}, {7, 10},
                                        {8, 9}, {8, 10}}),
                     0x35f568c45e3b3d54ULL, std::nullopt});
        t.push_back({"twelve_max", "12-vertex minimally rigid graph with the most NAC-colourings",
                     fixture_graph(12, {{0, 7}, {0, 8}, {0, 9}, {1, 7}, {1, 10}, {1, 11}, {2, 8}, {2, 10}, {2, 11},
                                        {3, 8}, {3, 10}, {3, 11}, {4, 9}, {4, 10}, {4, 11}, {5, 9}, {5, 10},
                                        {5, 11}, {6, 9}, {6, 10}, {6, 11}}),
                     0xddf8bd12eae52821ULL, std::nullopt});
        t.push_back({"h18", "18-vertex minimally rigid graph obtained from twelve_max by 0-extensions",
                     fixture_graph(18, {{0, 1},   {0, 5},   {0, 9},   {1, 2},   {1, 4},   {1, 6},   {1, 10},
                                        {1, 11},  {1, 12},  {1, 14},  {1, 16},  {2, 3},   {2, 5},   {3, 4},
                                        {3, 8},   {3, 11},  {4, 5},   {5, 6},   {5, 10},  {5, 11},  {5, 12},
                                        {5, 14},  {5, 16},  {6, 7},   {7, 8},   {8, 9},   {8, 13},  {8, 15},
                                        {8, 17},  {9, 10},  {12, 13}, {14, 15}, {16, 17}}),
                     0x949dc1e5925a4f31ULL, 180607});
        return t;
    }();
    return table;
}

inline const Fixture& fixture(std::string_view name) {
    for (const auto& f : fixtures())
        if (f.name == name) return f;
    throw PreconditionError("unknown fixture '" + std::string(name) + "'");
}

} // namespace rignac
