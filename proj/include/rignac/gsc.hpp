#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/stable_cut.hpp"

namespace rignac {

// Graphs with 2n-3 edges and no stable cut: built from K2 by gluing a
// triangle or a 3-prism along an edge or a triangle.
//
// Vertex layout of a prism piece: triangles p0p1p2 and q0q1q2, rungs piqi.
//   glued along a triangle edge : at = [p0, p1],     added = [p2, q0, q1, q2]
//   glued along a rung          : at = [p0, q0],     added = [p1, p2, q1, q2]
//   glued along a triangle      : at = [p0, p1, p2], added = [q0, q1, q2]
// A triangle piece glued along edge [u, v] adds one vertex adjacent to both.
// Gluing a triangle along a triangle adds nothing and is never emitted.

enum class GscPiece { Triangle, Prism };
enum class GscGlue { Edge, Triangle };
enum class PrismEdgeRole { None, TriangleEdge, Rung };

struct GscStep {
    GscPiece piece = GscPiece::Triangle;
    GscGlue glue = GscGlue::Edge;
    PrismEdgeRole role = PrismEdgeRole::None;  ///< for prisms glued along an edge
    std::vector<int> at;                        ///< glue site (existing vertices)
    std::vector<int> added;                     ///< new vertices, in layout order
};

struct GscDecomposition {
    Edge base{};                 ///< step 0: K2
    std::vector<GscStep> steps;  ///< gluing steps after the base
    int prisms = 0;

    /// Construction length including the base; an upper bound on the
    /// shortest construction.
    int depth() const noexcept { return static_cast<int>(steps.size()) + 1; }
};

/// Edges a step adds, given its layout.
inline std::vector<Edge> gsc_step_edges(const GscStep& s) {
    std::vector<Edge> es;
    auto add = [&](int a, int b) { es.push_back({std::min(a, b), std::max(a, b)}); };
    if (s.piece == GscPiece::Triangle) {
        if (s.glue != GscGlue::Edge || s.at.size() != 2 || s.added.size() != 1)
            throw PreconditionError("triangle step must be glued along an edge and add one vertex");
        add(s.at[0], s.added[0]);
        add(s.at[1], s.added[0]);
        return es;
    }
    int p0, p1, p2, q0, q1, q2;
    if (s.glue == GscGlue::Triangle) {
        if (s.at.size() != 3 || s.added.size() != 3) throw PreconditionError("prism along a triangle: bad arity");
        p0 = s.at[0], p1 = s.at[1], p2 = s.at[2], q0 = s.added[0], q1 = s.added[1], q2 = s.added[2];
        add(q0, q1), add(q1, q2), add(q0, q2), add(p0, q0), add(p1, q1), add(p2, q2);
        return es;
    }
    if (s.at.size() != 2 || s.added.size() != 4) throw PreconditionError("prism along an edge: bad arity");
    if (s.role == PrismEdgeRole::TriangleEdge) {
        p0 = s.at[0], p1 = s.at[1], p2 = s.added[0], q0 = s.added[1], q1 = s.added[2], q2 = s.added[3];
        add(p1, p2), add(p0, p2);
        add(q0, q1), add(q1, q2), add(q0, q2);
        add(p0, q0), add(p1, q1), add(p2, q2);
    } else if (s.role == PrismEdgeRole::Rung) {
        p0 = s.at[0], q0 = s.at[1], p1 = s.added[0], p2 = s.added[1], q1 = s.added[2], q2 = s.added[3];
        add(p0, p1), add(p1, p2), add(p0, p2);
        add(q0, q1), add(q1, q2), add(q0, q2);
        add(p1, q1), add(p2, q2);
    } else {
        throw PreconditionError("prism along an edge needs an edge role");
    }
    return es;
}

/// Rebuilds the graph a decomposition describes, on its own vertex ids.
/// Throws if a glue site is missing or a vertex is reused.
inline Graph replay(const GscDecomposition& d) {
    int n = 2;
    for (const auto& s : d.steps) n += static_cast<int>(s.added.size());
    std::vector<char> present(n, 0);
    auto need_vertex = [&](int x) {
        if (x < 0 || x >= n) throw PreconditionError("decomposition vertex " + std::to_string(x) + " out of range");
    };
    need_vertex(d.base.u), need_vertex(d.base.v);
    if (d.base.u == d.base.v) throw PreconditionError("decomposition base is a loop");
    present[d.base.u] = present[d.base.v] = 1;
    std::vector<Edge> es{{std::min(d.base.u, d.base.v), std::max(d.base.u, d.base.v)}};
    auto has_edge = [&](int a, int b) {
        Edge e{std::min(a, b), std::max(a, b)};
        return std::find(es.begin(), es.end(), e) != es.end();
    };
    for (const auto& s : d.steps) {
        for (int x : s.at) {
            need_vertex(x);
            if (!present[x]) throw PreconditionError("glue site vertex " + std::to_string(x) + " not yet present");
        }
        for (std::size_t i = 0; i < s.at.size(); ++i)
            for (std::size_t j = i + 1; j < s.at.size(); ++j)
                if (!has_edge(s.at[i], s.at[j])) throw PreconditionError("glue site is not an edge or triangle");
        for (int x : s.added) {
            need_vertex(x);
            if (present[x]) throw PreconditionError("vertex " + std::to_string(x) + " added twice");
            present[x] = 1;
        }
        for (auto e : gsc_step_edges(s)) es.push_back(e);
    }
    return Graph(n, std::move(es));
}

enum class GscRejection { EdgeCountMismatch, HasStableCut };

struct GscRecognition {
    std::optional<GscDecomposition> decomposition;  ///< set iff member
    std::optional<GscRejection> rejection;
    std::optional<StableCutResult> witness;          ///< stable cut for HasStableCut (n <= 24)

    bool member() const noexcept { return decomposition.has_value(); }
};

namespace detail {

struct GscPeeler {
    int n;
    std::vector<std::uint64_t> adj;
    std::unordered_set<std::uint64_t> failed;
    std::vector<GscStep> peeled;  // last construction step first

    static int bit(std::uint64_t m) { return std::countr_zero(m); }

    /// W ∪ site induces a 3-prism and W has no other neighbours.
    bool prism_piece(std::uint64_t alive, std::uint64_t w, std::uint64_t site) const {
        const std::uint64_t x = w | site;
        for (auto r = w; r; r &= r - 1) {
            int v = bit(r);
            auto nb = adj[v] & alive;
            if (std::popcount(nb) != 3 || (nb & ~x)) return false;
        }
        for (auto r = site; r; r &= r - 1)
            if (std::popcount(adj[bit(r)] & x) != 3) return false;
        for (auto r = x; r; r &= r - 1) {
            int v = bit(r);
            auto nb = adj[v] & x;
            // Cubic on six vertices with a triangle is the prism (else K33).
            for (auto ra = nb; ra; ra &= ra - 1)
                if (adj[bit(ra)] & nb) return true;
        }
        return false;
    }

    int neighbour_in(int v, std::uint64_t set) const { return bit(adj[v] & set); }

    bool peel(std::uint64_t alive) {
        if (std::popcount(alive) == 2) return true;
        if (failed.count(alive)) return false;

        // Triangle glued along an edge: degree-2 vertex with adjacent neighbours.
        for (auto r = alive; r; r &= r - 1) {
            int v = bit(r);
            auto nb = adj[v] & alive;
            if (std::popcount(nb) != 2) continue;
            int a = bit(nb), b = bit(nb & (nb - 1));
            if (!((adj[a] >> b) & 1)) continue;
            peeled.push_back({GscPiece::Triangle, GscGlue::Edge, PrismEdgeRole::None, {a, b}, {v}});
            if (peel(alive & ~(1ULL << v))) return true;
            peeled.pop_back();
        }

        std::uint64_t deg3 = 0;
        for (auto r = alive; r; r &= r - 1)
            if (std::popcount(adj[bit(r)] & alive) == 3) deg3 |= 1ULL << bit(r);

        // Prism glued along an edge uv.
        for (auto ru = alive; ru; ru &= ru - 1) {
            int u = bit(ru);
            for (auto rv = adj[u] & alive & ~((2ULL << u) - 1); rv; rv &= rv - 1) {
                int v = bit(rv);
                std::uint64_t site = (1ULL << u) | (1ULL << v);
                if (std::popcount(alive) < 6) continue;
                std::uint64_t near = (adj[u] | adj[v]) & deg3 & ~site;
                std::uint64_t cand = near;
                for (auto r = near; r; r &= r - 1) cand |= adj[bit(r)] & deg3;
                cand &= ~site;
                std::vector<int> c;
                for (auto r = cand; r; r &= r - 1) c.push_back(bit(r));
                const int k = static_cast<int>(c.size());
                for (int i = 0; i < k; ++i)
                    for (int j = i + 1; j < k; ++j)
                        for (int l = j + 1; l < k; ++l)
                            for (int t = l + 1; t < k; ++t) {
                                std::uint64_t w = (1ULL << c[i]) | (1ULL << c[j]) | (1ULL << c[l]) | (1ULL << c[t]);
                                if (!prism_piece(alive, w, site)) continue;
                                peeled.push_back(edge_prism_step(u, v, w));
                                if (peel(alive & ~w)) return true;
                                peeled.pop_back();
                            }
            }
        }

        // Prism glued along a triangle: W is a triangle of degree-3 vertices.
        for (auto r1 = deg3; r1; r1 &= r1 - 1) {
            int a = bit(r1);
            for (auto r2 = adj[a] & deg3 & ~((2ULL << a) - 1); r2; r2 &= r2 - 1) {
                int b = bit(r2);
                for (auto r3 = adj[a] & adj[b] & deg3 & ~((2ULL << b) - 1); r3; r3 &= r3 - 1) {
                    int c = bit(r3);
                    std::uint64_t w = (1ULL << a) | (1ULL << b) | (1ULL << c);
                    std::uint64_t site = 0;
                    for (int x : {a, b, c}) site |= adj[x] & alive & ~w;
                    if (std::popcount(site) != 3 || std::popcount(alive & ~w) < 3) continue;
                    if (!prism_piece(alive, w, site)) continue;
                    GscStep s{GscPiece::Prism, GscGlue::Triangle, PrismEdgeRole::None, {}, {}};
                    for (auto r = site; r; r &= r - 1) {
                        int t = bit(r);
                        s.at.push_back(t);
                        s.added.push_back(neighbour_in(t, w));
                    }
                    peeled.push_back(std::move(s));
                    if (peel(alive & ~w)) return true;
                    peeled.pop_back();
                }
            }
        }

        failed.insert(alive);
        return false;
    }

    GscStep edge_prism_step(int u, int v, std::uint64_t w) const {
        GscStep s{GscPiece::Prism, GscGlue::Edge, PrismEdgeRole::None, {u, v}, {}};
        auto nu = adj[u] & w, nv = adj[v] & w;
        if (auto common = nu & nv) {
            int p2 = bit(common);
            int q0 = bit(nu & ~common), q1 = bit(nv & ~common);
            int q2 = bit(w & ~((1ULL << p2) | (1ULL << q0) | (1ULL << q1)));
            s.role = PrismEdgeRole::TriangleEdge;
            s.added = {p2, q0, q1, q2};
        } else {
            int p1 = bit(nu), p2 = bit(nu & (nu - 1));
            int q1 = neighbour_in(p1, nv), q2 = neighbour_in(p2, nv);
            s.role = PrismEdgeRole::Rung;
            s.added = {p1, p2, q1, q2};
        }
        return s;
    }
};

} // namespace detail

/// Decides membership in the stable-cut-free family for a connected graph.
///
/// Members get a decomposition found by backtracking peels (inverse gluing
/// steps) memoized on the surviving vertex set. Non-members with 2n-3 edges
/// get a stable-cut witness from exhaustive search when n <= 24.
inline GscRecognition recognize_gsc(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("recognize_gsc needs at least two vertices");
    if (!is_connected(g)) throw PreconditionError("recognize_gsc needs a connected graph");
    if (n > 64) throw LimitError("recognize_gsc supports at most 64 vertices");
    GscRecognition out;
    if (g.edge_count() != 2 * n - 3) {
        out.rejection = GscRejection::EdgeCountMismatch;
        return out;
    }
    detail::GscPeeler peeler{n, {}, {}, {}};
    for (int v = 0; v < n; ++v) peeler.adj.push_back(g.neighbour_mask(v));
    std::uint64_t all = n == 64 ? ~0ULL : (1ULL << n) - 1;
    if (peeler.peel(all)) {
        GscDecomposition d;
        std::uint64_t alive = all;
        for (const auto& s : peeler.peeled)
            for (int x : s.added) alive &= ~(1ULL << x);
        int a = std::countr_zero(alive);
        int b = std::countr_zero(alive & (alive - 1));
        d.base = {a, b};
        d.steps.assign(peeler.peeled.rbegin(), peeler.peeled.rend());
        for (const auto& s : d.steps) d.prisms += s.piece == GscPiece::Prism;
        out.decomposition = std::move(d);
        return out;
    }
    out.rejection = GscRejection::HasStableCut;
    if (n <= kExhaustiveStableCutLimit) {
        out.witness = exhaustive_stable_cut(g);
        if (!out.witness) throw Error("recognize_gsc: no decomposition and no stable cut (internal error)");
    }
    return out;
}

/// Number of distinct 3-prism subgraphs (not necessarily induced).
inline int count_prism_subgraphs(const Graph& g) {
    std::vector<std::array<int, 3>> tri;
    for (const auto& e : g.edges())
        for (int w : g.neighbours(e.v))
            if (w > e.v && g.adjacent(e.u, w)) tri.push_back({e.u, e.v, w});
    int count = 0;
    for (std::size_t i = 0; i < tri.size(); ++i)
        for (std::size_t j = i + 1; j < tri.size(); ++j) {
            const auto& a = tri[i];
            auto b = tri[j];
            bool disjoint = true;
            for (int x : a)
                for (int y : b) disjoint &= x != y;
            if (!disjoint) continue;
            std::sort(b.begin(), b.end());
            do {
                if (g.adjacent(a[0], b[0]) && g.adjacent(a[1], b[1]) && g.adjacent(a[2], b[2])) ++count;
            } while (std::next_permutation(b.begin(), b.end()));
        }
    return count;
}

} // namespace rignac
