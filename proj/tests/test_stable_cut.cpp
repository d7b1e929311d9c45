#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rignac/catalog.hpp"
#include "rignac/constructions.hpp"
#include "rignac/stable_cut.hpp"

using namespace rignac;

namespace {

std::uint64_t mask_of(const VertexSet& s) {
    std::uint64_t x = 0;
    for (int v : s.members()) x |= 1ULL << v;
    return x;
}

std::vector<int> members(std::uint64_t x) {
    std::vector<int> out;
    for (int v = 0; x; ++v, x >>= 1)
        if (x & 1) out.push_back(v);
    return out;
}

std::uint64_t reach(const Graph& g, std::uint64_t alive, int s) {
    std::uint64_t seen = 1ULL << s;
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : g.neighbours(x))
            if (((alive >> w) & 1) && !((seen >> w) & 1)) {
                seen |= 1ULL << w;
                stack.push_back(w);
            }
    }
    return seen;
}

/// Stable, a cut, separating/avoiding as claimed; checked with the oracles.
void expect_valid(const Graph& g, const StableCutResult& r) {
    const std::uint64_t cut = mask_of(r.cut);
    const std::uint64_t rest = oracle::all(g.vertex_count()) & ~cut;
    ASSERT_TRUE(oracle::stable(g, cut));
    ASSERT_GE(oracle::components(g, rest), 2);
    if (r.separated) {
        auto [u, v] = *r.separated;
        ASSERT_FALSE((cut >> u) & 1);
        ASSERT_FALSE((cut >> v) & 1);
        ASSERT_FALSE((reach(g, rest, u) >> v) & 1);
    }
    if (r.avoided) {
        ASSERT_FALSE((cut >> *r.avoided) & 1);
    }
    ASSERT_TRUE(validate_stable_cut(g, r));
}

StableCutConstraints separating(int u, int v) {
    StableCutConstraints c;
    c.separate = std::pair{u, v};
    return c;
}

StableCutConstraints avoiding(int v) {
    StableCutConstraints c;
    c.avoid = v;
    return c;
}

StableCutConstraints one_per_component() {
    StableCutConstraints c;
    c.at_most_one_per_rigid_component = true;
    return c;
}

int max_per_component(const Graph& g, const VertexSet& cut) {
    return max_cut_vertices_per_rigid_component(rigidity_report(g), cut);
}

Graph random_flexible(std::mt19937_64& rng, int n) {
    while (true) {
        Graph g = oracle::random_connected(rng, n, 0.25);
        if (!is_rigid(g)) return g;
    }
}

std::vector<Graph> flexible_catalog_graphs(int hi) {
    std::vector<Graph> out;
    for (int n = 3; n <= hi; ++n)
        for (const auto& f : minimally_rigid_classes(n)) {
            Graph g = parse_graph6(f);
            for (int e = 0; e < g.edge_count(); ++e) out.push_back(with_edge_removed(g, e));
        }
    return out;
}

} // namespace

TEST(Algorithm1, CycleOppositePair) {
    auto r = algorithm1_stable_cut(make_cycle(4), 0, 2);
    EXPECT_EQ(r.cut.members(), (std::vector<int>{1, 3}));
    EXPECT_EQ(r.separated, (std::pair{0, 2}));
}

TEST(Algorithm1, TwoTrianglesAtAVertexRecurses) {
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    Algorithm1Stats stats;
    auto r = algorithm1_stable_cut(g, 0, 3, &stats);
    expect_valid(g, r);
    EXPECT_GE(stats.levels, 2);
    EXPECT_FALSE(oracle::stable_cuts(g).empty());
}

TEST(Algorithm1, LadderSeparatesEnds) {
    // The ladder G'_k is G_k without x and y; G_k itself is minimally rigid.
    EXPECT_TRUE(is_minimally_rigid(make_gk(2).graph));
    EXPECT_THROW(algorithm1_stable_cut(make_gk(2).graph, 4, 2), PreconditionError);
    Graph g = make_ladder(3).graph;
    auto r = algorithm1_stable_cut(g, 0, 4);
    expect_valid(g, r);
    auto cuts = oracle::stable_cuts(g);
    EXPECT_NE(std::find(cuts.begin(), cuts.end(), mask_of(r.cut)), cuts.end());
}

TEST(Algorithm1, PreconditionsNamed) {
    auto msg = [](auto&& f) {
        try {
            f();
        } catch (const PreconditionError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_NE(msg([] { algorithm1_stable_cut(Graph(4, {{0, 1}, {2, 3}}), 0, 2); }).find("connected"),
              std::string::npos);
    EXPECT_NE(msg([] { algorithm1_stable_cut(fixture("prism").graph, 0, 4); }).find("rigid"), std::string::npos);
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    EXPECT_NE(msg([&] { algorithm1_stable_cut(g, 0, 1); }).find("common rigid component"), std::string::npos);
}

TEST(Algorithm1, RandomFlexibleGraphsAreValidAndRespectComponents) {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        int n = 4 + static_cast<int>(rng() % 9);
        Graph g = random_flexible(rng, n);
        auto rep = rigidity_report(g);
        int u, v;
        do {
            u = static_cast<int>(rng() % n);
            v = static_cast<int>(rng() % n);
        } while (u == v || rep.share_component(u, v));
        auto r = algorithm1_stable_cut(g, u, v);
        expect_valid(g, r);
        ASSERT_LE(max_per_component(g, r.cut), 1);
        auto ex = exhaustive_stable_cut(g, separating(u, v));
        ASSERT_TRUE(ex);
        ASSERT_LE(ex->cut.count(), r.cut.count());
    }
}

TEST(Algorithm1, CatalogMinusAnEdgeRespectsComponents) {
    for (const auto& g : flexible_catalog_graphs(7)) {
        if (!is_connected(g)) continue;
        auto rep = rigidity_report(g);
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v) {
                if (rep.share_component(u, v)) continue;
                auto r = algorithm1_stable_cut(g, u, v);
                expect_valid(g, r);
                ASSERT_LE(max_cut_vertices_per_rigid_component(rep, r.cut), 1);
            }
    }
}

TEST(Algorithm1, WorkGrowsAtMostCubically) {
    // Doubling n may multiply the work by at most 8, with a factor 2 slack.
    std::vector<std::uint64_t> work;
    std::vector<int> ks{4, 8, 16, 32};
    for (int k : ks) {
        Graph g = make_ladder(k).graph;
        Algorithm1Stats stats;
        auto r = algorithm1_stable_cut(g, 0, g.vertex_count() - 1, &stats);
        ASSERT_TRUE(validate_stable_cut(g, r));
        work.push_back(stats.work);
    }
    for (std::size_t i = 1; i < work.size(); ++i)
        EXPECT_LE(work[i], 16 * work[i - 1]) << "k=" << ks[i] << " work " << work[i] << " vs " << work[i - 1];
}

TEST(StableCutAvoiding, Examples) {
    for (int v = 0; v < 5; ++v) {
        auto r = stable_cut_avoiding(make_cycle(5), v);
        expect_valid(make_cycle(5), r);
        EXPECT_EQ(r.cut.count(), 2);
        EXPECT_EQ(r.avoided, v);
    }
    for (int v = 0; v < 4; ++v) {
        auto r = stable_cut_avoiding(make_cycle(4), v);
        EXPECT_EQ(r.cut.members(), v % 2 ? (std::vector<int>{0, 2}) : (std::vector<int>{1, 3}));
    }
    EXPECT_THROW(stable_cut_avoiding(fixture("prism").graph, 0), PreconditionError);
    EXPECT_THROW(stable_cut_avoiding(make_path(4), 0), PreconditionError);
}

TEST(StableCutAvoiding, TwoConnectedSparseCatalogGraphs) {
    // 2-connected graphs with at most 2n - 4 edges have, for every v, a
    // stable cut avoiding v.
    int checked = 0;
    for (const auto& g : flexible_catalog_graphs(7)) {
        if (!is_2connected(g)) continue;
        ++checked;
        for (int v = 0; v < g.vertex_count(); ++v) {
            auto ex = exhaustive_stable_cut(g, avoiding(v));
            ASSERT_TRUE(ex) << to_graph6(g) << " v=" << v;
            expect_valid(g, *ex);
            expect_valid(g, stable_cut_avoiding(g, v));
        }
    }
    EXPECT_GT(checked, 100);
}

TEST(ExhaustiveStableCut, Examples) {
    EXPECT_FALSE(exhaustive_stable_cut(make_complete(4)));
    auto p = exhaustive_stable_cut(make_path(3));
    ASSERT_TRUE(p);
    EXPECT_EQ(p->cut.members(), std::vector<int>{1});
    EXPECT_THROW(exhaustive_stable_cut(make_path(25)), LimitError);
}

TEST(ExhaustiveStableCut, MinimumAndLexicographicallySmallest) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 200; ++t) {
        Graph g = oracle::random_connected(rng, 3 + static_cast<int>(rng() % 7), 0.3);
        auto cuts = oracle::stable_cuts(g);
        auto r = exhaustive_stable_cut(g);
        ASSERT_EQ(r.has_value(), !cuts.empty());
        if (!r) continue;
        std::vector<int> best;
        int best_size = 1 << 30;
        for (auto c : cuts) {
            auto m = members(c);
            int k = static_cast<int>(m.size());
            if (k < best_size || (k == best_size && m < best)) best = m, best_size = k;
        }
        ASSERT_EQ(r->cut.members(), best);
    }
}

TEST(ExhaustiveStableCut, EveryFlexibleCatalogGraphHasOne) {
    for (const auto& g : flexible_catalog_graphs(7)) {
        auto r = exhaustive_stable_cut(g);
        ASSERT_TRUE(r) << to_graph6(g);
        expect_valid(g, *r);
        auto f = find_stable_cut(g);
        ASSERT_TRUE(f);
        expect_valid(g, *f);
    }
}

TEST(ExhaustiveStableCut, ComponentConstraint) {
    Graph g = with_edge_removed(fixture("prism").graph, 0);
    auto r = exhaustive_stable_cut(g, one_per_component());
    ASSERT_TRUE(r);
    EXPECT_LE(max_per_component(g, r->cut), 1);
}

TEST(ExhaustiveStableCut, SeparateConstraint) {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; ++t) {
        const int n = 4 + static_cast<int>(rng() % 5);
        Graph g = oracle::random_connected(rng, n, 0.3);
        int u = static_cast<int>(rng() % n), v = static_cast<int>((u + 1 + rng() % (n - 1)) % n);
        auto r = exhaustive_stable_cut(g, separating(u, v));
        bool any = false;
        for (auto c : oracle::stable_cuts(g)) {
            if (((c >> u) & 1) || ((c >> v) & 1)) continue;
            any |= !((reach(g, oracle::all(n) & ~c, u) >> v) & 1);
        }
        ASSERT_EQ(r.has_value(), any);
        if (r) {
            expect_valid(g, *r);
        }
    }
}

TEST(FindStableCut, DisconnectedAndRigid) {
    auto d = find_stable_cut(Graph(4, {{0, 1}, {2, 3}}));
    ASSERT_TRUE(d);
    EXPECT_EQ(d->cut.count(), 0);
    EXPECT_FALSE(find_stable_cut(make_complete(4)));
    EXPECT_FALSE(find_stable_cut(fixture("prism").graph));
    auto k33 = find_stable_cut(make_complete_bipartite(3, 3));
    ASSERT_TRUE(k33);
    expect_valid(make_complete_bipartite(3, 3), *k33);
}
