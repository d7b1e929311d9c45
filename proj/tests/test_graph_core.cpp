#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rignac/canonical.hpp"
#include "rignac/catalog.hpp"
#include "rignac/constructions.hpp"
#include "rignac/io.hpp"

using namespace rignac;

namespace {

VertexSet set_of(int n, std::initializer_list<int> vs) { return VertexSet(n, std::vector<int>(vs)); }

Graph two_triangles_at_vertex() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

} // namespace

TEST(Graph, NormalizesAndSortsEdges) {
    Graph g(4, {{3, 2}, {0, 1}, {1, 3}});
    ASSERT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.edge(0), (Edge{0, 1}));
    EXPECT_EQ(g.edge(1), (Edge{1, 3}));
    EXPECT_EQ(g.edge(2), (Edge{2, 3}));
    EXPECT_EQ(g.neighbours(3), (std::vector<int>{1, 2}));
    EXPECT_EQ(g.edge_index(3, 1), 1);
    EXPECT_FALSE(g.edge_index(0, 3));
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
    EXPECT_THROW(Graph(3, {{1, 1}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
    EXPECT_THROW(Graph(3, {{0, 3}}), PreconditionError);
}

TEST(VertexSet, RejectsOutOfRange) {
    VertexSet s(3);
    EXPECT_THROW(s.insert(3), PreconditionError);
    EXPECT_THROW(s.insert(-1), PreconditionError);
}

TEST(ParseGraph, EdgeListPath) {
    auto p = parse_graph("0 1\n1 2");
    EXPECT_EQ(p.graph, Graph(3, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, LabelsCompactedInOrderOfAppearance) {
    auto p = parse_graph("# a comment\nx y\n\ny z  # trailing\nw\n");
    EXPECT_EQ(p.labels, (std::vector<std::string>{"x", "y", "z", "w"}));
    EXPECT_EQ(p.graph, Graph(4, {{0, 1}, {1, 2}}));
}

TEST(ParseGraph, DuplicateEdgeNamesBothLines) {
    try {
        parse_graph("0 1\n0 1");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
        EXPECT_NE(msg.find("duplicate"), std::string::npos) << msg;
        EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
    }
    EXPECT_THROW(parse_graph("1 0\n0 1"), ParseError);
}

TEST(ParseGraph, LoopAndBadLine) {
    try {
        parse_graph("0 1\n2 2\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
    EXPECT_THROW(parse_graph("0 1 2\n"), ParseError);
}

TEST(Graph6, KnownStringRoundTrips) {
    auto p = parse_graph("D?{");
    EXPECT_EQ(p.graph.vertex_count(), 5);
    EXPECT_EQ(to_graph6(p.graph), "D?{");
    EXPECT_EQ(oracle::graph6(p.graph), "D?{");
}

TEST(Graph6, HeaderAndErrors) {
    EXPECT_EQ(parse_graph(">>graph6<<D?{").graph, parse_graph("D?{").graph);
    EXPECT_THROW(parse_graph6("D?"), ParseError);      // too short
    EXPECT_THROW(parse_graph6("B@"), ParseError);      // padding bits set
    EXPECT_THROW(parse_graph6("~???"), ParseError);    // n > 62 form
    EXPECT_EQ(parse_graph("D?{", GraphFormat::EdgeList).graph.vertex_count(), 1);  // a lone vertex name
}

TEST(Graph6, EncoderMatchesIndependentCodec) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 1 + static_cast<int>(rng() % 20);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) es.push_back({i, j});
        Graph g(n, es);
        ASSERT_EQ(to_graph6(g), oracle::graph6(g));
        ASSERT_EQ(parse_graph6(to_graph6(g)), g);
    }
}

TEST(RoundTrip, CatalogGraphsBothFormats) {
    for (int n = 3; n <= 8; ++n)
        for (const auto& form : minimally_rigid_classes(n)) {
            Graph g = parse_graph6(form);
            ASSERT_EQ(parse_graph(to_graph6(g)).graph, g);
            ASSERT_EQ(parse_graph(to_edge_list(g)).graph, g) << to_edge_list(g);
        }
}

TEST(RoundTrip, EdgeListWithIsolatedAndLateVertices) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        int n = 1 + static_cast<int>(rng() % 9);
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) es.push_back({i, j});
        Graph g(n, es);
        auto p = parse_graph(to_edge_list(g), GraphFormat::EdgeList);
        ASSERT_EQ(p.graph, g) << to_edge_list(g);
    }
}

TEST(ConnectedComponents, Examples) {
    EXPECT_EQ(connected_components(make_complete(3)).size(), 1u);
    EXPECT_EQ(connected_components(make_complete(3))[0].count(), 3);
    EXPECT_EQ(connected_components(Graph(4, {{0, 1}, {2, 3}})).size(), 2u);
    auto empty = connected_components(Graph(3, {}));
    ASSERT_EQ(empty.size(), 3u);
    for (const auto& c : empty) EXPECT_EQ(c.count(), 1);
}

TEST(Blocks, Examples) {
    auto b = blocks(two_triangles_at_vertex());
    ASSERT_EQ(b.size(), 2u);
    EXPECT_EQ(b[0].size(), 3u);
    EXPECT_EQ(b[1].size(), 3u);
    EXPECT_EQ(blocks(make_path(4)).size(), 3u);
    EXPECT_EQ(blocks(make_complete(4)).size(), 1u);
    EXPECT_THROW(blocks(Graph(3, {{0, 1}})), PreconditionError);
}

TEST(Blocks, PartitionIntoTwoConnectedPiecesOrBridges) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 150; ++t) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = oracle::random_connected(rng, n, 0.2);
        auto bs = blocks(g);
        std::vector<int> hits(g.edge_count(), 0);
        int smallest = -1;
        for (const auto& b : bs) {
            ASSERT_GT(b.front(), smallest);
            smallest = b.front();
            for (int e : b) ++hits[e];
            auto sub = edge_subgraph(g, b);
            if (b.size() > 1) {
                ASSERT_TRUE(oracle::two_connected(sub.graph));
            }
        }
        for (int h : hits) ASSERT_EQ(h, 1);
        // Maximality: merging any two blocks is never 2-connected.
        for (std::size_t i = 0; i < bs.size(); ++i)
            for (std::size_t j = i + 1; j < bs.size(); ++j) {
                auto both = bs[i];
                both.insert(both.end(), bs[j].begin(), bs[j].end());
                ASSERT_FALSE(oracle::two_connected(edge_subgraph(g, both).graph));
            }
    }
}

TEST(StableSet, Examples) {
    auto c4 = make_cycle(4);
    EXPECT_TRUE(is_stable_set(c4, set_of(4, {0, 2})));
    for (const auto& e : c4.edges()) EXPECT_FALSE(is_stable_set(c4, set_of(4, {e.u, e.v})));
    EXPECT_TRUE(is_stable_set(c4, VertexSet(4)));
}

TEST(Cut, Examples) {
    EXPECT_TRUE(is_cut(make_path(3), set_of(3, {1})));
    auto k4 = make_complete(4);
    for (std::uint64_t x = 0; x < 16; ++x) {
        VertexSet s(4);
        for (int v = 0; v < 4; ++v)
            if ((x >> v) & 1) s.insert(v);
        EXPECT_FALSE(is_cut(k4, s));
    }
    EXPECT_TRUE(is_cut(Graph(4, {{0, 1}, {2, 3}}), VertexSet(4)));
    EXPECT_FALSE(is_cut(make_path(3), set_of(3, {0, 1})));  // one vertex left
}

TEST(ContractEdge, Examples) {
    auto tri = contract_edge(make_complete(3), 0);
    EXPECT_EQ(tri.graph, Graph(2, {{0, 1}}));
    EXPECT_EQ(tri.merged, 0);
    auto c4 = contract_edge(make_cycle(4), *make_cycle(4).edge_index(1, 2));
    EXPECT_EQ(c4.graph, make_complete(3));
    EXPECT_EQ(c4.merged, 1);
}

TEST(ContractEdge, MatchesSetQuotient) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_connected(rng, 3 + static_cast<int>(rng() % 6), 0.4);
        int e = static_cast<int>(rng() % g.edge_count());
        auto [u, v] = g.edge(e);
        auto c = contract_edge(g, e);
        // Quotient: identify v with u, drop loops, then compact ids.
        std::set<std::pair<int, int>> q;
        for (const auto& f : g.edges()) {
            int a = f.u == v ? u : f.u, b = f.v == v ? u : f.v;
            if (a == b) continue;
            a -= a > v, b -= b > v;
            q.insert({std::min(a, b), std::max(a, b)});
        }
        std::vector<Edge> es;
        for (auto [a, b] : q) es.push_back({a, b});
        ASSERT_EQ(c.graph, Graph(g.vertex_count() - 1, es));
    }
    EXPECT_EQ(contract_edge(make_complete(4), 0).graph, make_complete(3));
}

TEST(CanonicalForm, PrismLabellingsAgree) {
    const auto& prism = fixture("prism").graph;
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        EXPECT_EQ(canonical_form(relabel(prism, perm)), canonical_form(prism));
    }
}

TEST(CanonicalForm, DistinguishesSameDegreeSequences) {
    EXPECT_NE(canonical_form(fixture("prism").graph), canonical_form(make_complete_bipartite(3, 3)));
    Graph two_triangles = disjoint_union(make_complete(3), make_complete(3));
    EXPECT_NE(canonical_form(make_cycle(6)), canonical_form(two_triangles));
    EXPECT_FALSE(oracle::isomorphic(make_cycle(6), two_triangles));
}

TEST(CanonicalForm, LimitEnforced) { EXPECT_THROW(canonical_form(make_path(13)), LimitError); }

TEST(CanonicalForm, AgreesWithBruteForceOnSixVertexMinimallyRigidGraphs) {
    auto forms = minimally_rigid_classes_brute_force(6);
    std::vector<Graph> gs;
    std::mt19937_64 rng(2);
    for (const auto& f : forms) {
        Graph g = parse_graph6(f);
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        gs.push_back(g);
        gs.push_back(relabel(g, perm));
    }
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i; j < gs.size(); ++j)
            ASSERT_EQ(canonical_form(gs[i]) == canonical_form(gs[j]), oracle::isomorphic(gs[i], gs[j]));
}

TEST(CanonicalForm, AgreesWithBruteForceOnRandomGraphs) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 300; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph a = oracle::random_connected(rng, n, 0.3);
        Graph b = oracle::random_connected(rng, n, 0.3);
        ASSERT_EQ(isomorphic(a, b), oracle::isomorphic(a, b));
    }
}

TEST(Separation, ValidatesAndComputesSharedVertices) {
    Graph g = two_triangles_at_vertex();
    Separation s(g, {0, 1, 2}, {3, 4, 5});
    EXPECT_EQ(s.shared_vertices().members(), std::vector<int>{2});
    EXPECT_THROW(Separation(g, {0, 1}, {3, 4, 5}), PreconditionError);        // not covering
    EXPECT_THROW(Separation(g, {0, 1, 2, 3}, {3, 4, 5}), PreconditionError);  // overlap
    EXPECT_THROW(Separation(g, {}, {0, 1, 2, 3, 4, 5}), PreconditionError);
}
