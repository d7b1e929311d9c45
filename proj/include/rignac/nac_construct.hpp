#pragma once

#include <optional>
#include <string>

#include "rignac/colouring.hpp"
#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/gsc.hpp"
#include "rignac/rigidity.hpp"
#include "rignac/stable_cut.hpp"
#include "rignac/structure.hpp"

namespace rignac {

enum class NacConstructionMethod { NoNac, NeighbourhoodCut, ExhaustiveCut, PrismDecomposition };

inline const char* to_string(NacConstructionMethod m) {
    switch (m) {
    case NacConstructionMethod::NoNac: return "none";
    case NacConstructionMethod::NeighbourhoodCut: return "neighbourhood-cut";
    case NacConstructionMethod::ExhaustiveCut: return "exhaustive-cut";
    case NacConstructionMethod::PrismDecomposition: return "prism-decomposition";
    }
    return "?";
}

struct NacConstruction {
    NacConstructionMethod method = NacConstructionMethod::NoNac;
    std::optional<EdgeColouring> colouring;
    std::optional<TwoTreeCertificate> two_tree;  ///< set when there is no NAC-colouring
    std::optional<VertexSet> cut;                ///< the stable cut used, if any
    std::optional<GscDecomposition> decomposition;

    bool has_nac() const noexcept { return colouring.has_value(); }
};

namespace detail {

/// A vertex whose neighbourhood is a stable cut, smallest first.
inline std::optional<VertexSet> neighbourhood_stable_cut(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbourhood(v);
        if (is_stable_cut(g, nb)) return nb;
    }
    return std::nullopt;
}

/// Colours the last prism of the decomposition with its NAC-colouring
/// (triangles blue, rungs red); everything built before it takes the colour
/// of the prism's glue site and every later triangle takes the colour of the
/// edge it is glued along.
inline EdgeColouring colour_from_decomposition(const Graph& g, const GscDecomposition& d) {
    int last = -1;
    for (int i = 0; i < static_cast<int>(d.steps.size()); ++i)
        if (d.steps[i].piece == GscPiece::Prism) last = i;
    if (last < 0) throw PreconditionError("decomposition uses no prism");

    EdgeColouring c(g.edge_count());
    auto index = [&](int a, int b) {
        auto e = g.edge_index(a, b);
        if (!e) throw Error("decomposition edge missing from graph (internal error)");
        return *e;
    };
    const auto& p = d.steps[last];
    const bool site_red = p.glue == GscGlue::Edge && p.role == PrismEdgeRole::Rung;

    std::vector<char> done(g.edge_count(), 0);
    auto paint = [&](int a, int b, bool red) {
        int e = index(a, b);
        c.set_red(e, red);
        done[e] = 1;
    };
    paint(d.base.u, d.base.v, site_red);
    for (int i = 0; i < last; ++i)
        for (auto e : gsc_step_edges(d.steps[i])) paint(e.u, e.v, site_red);

    int p0, p1, p2, q0, q1, q2;
    if (p.glue == GscGlue::Triangle) {
        p0 = p.at[0], p1 = p.at[1], p2 = p.at[2], q0 = p.added[0], q1 = p.added[1], q2 = p.added[2];
    } else if (p.role == PrismEdgeRole::TriangleEdge) {
        p0 = p.at[0], p1 = p.at[1], p2 = p.added[0], q0 = p.added[1], q1 = p.added[2], q2 = p.added[3];
    } else {
        p0 = p.at[0], q0 = p.at[1], p1 = p.added[0], p2 = p.added[1], q1 = p.added[2], q2 = p.added[3];
    }
    for (auto [a, b] : {std::pair{p0, p1}, {p1, p2}, {p0, p2}, {q0, q1}, {q1, q2}, {q0, q2}}) paint(a, b, false);
    for (auto [a, b] : {std::pair{p0, q0}, {p1, q1}, {p2, q2}}) paint(a, b, true);

    for (int i = last + 1; i < static_cast<int>(d.steps.size()); ++i) {
        const auto& s = d.steps[i];
        bool red = c.red(index(s.at[0], s.at[1]));
        for (auto e : gsc_step_edges(s)) paint(e.u, e.v, red);
    }
    for (char x : done)
        if (!x) throw Error("decomposition does not cover the graph (internal error)");
    return c;
}

} // namespace detail

/// A NAC-colouring of a minimally rigid graph, or a 2-tree certificate that
/// none exists.
///
/// Tries a stable neighbourhood first, then the smallest stable cut by
/// exhaustive search (n <= 24); a stable cut yields a NAP-colouring. Graphs
/// without a stable cut are decomposed into triangles and prisms.
inline NacConstruction construct_nac_minimally_rigid(const Graph& g) {
    if (!is_minimally_rigid(g)) throw PreconditionError("graph is not minimally rigid");
    NacConstruction out;
    auto cert = two_tree_certificate(g);
    if (cert.is_2tree) {
        out.two_tree = std::move(cert);
        return out;
    }
    auto use_cut = [&](const VertexSet& cut, NacConstructionMethod how) {
        out.method = how;
        out.cut = cut;
        out.colouring = nap_from_separation(g, separation_from_stable_cut(g, cut));
        return out;
    };
    if (auto nb = detail::neighbourhood_stable_cut(g)) return use_cut(*nb, NacConstructionMethod::NeighbourhoodCut);
    if (g.vertex_count() <= kExhaustiveStableCutLimit)
        if (auto r = exhaustive_stable_cut(g)) return use_cut(r->cut, NacConstructionMethod::ExhaustiveCut);

    auto rec = recognize_gsc(g);
    if (!rec.member()) {
        if (rec.witness) return use_cut(rec.witness->cut, NacConstructionMethod::ExhaustiveCut);
        throw LimitError("graph has a stable cut but it is too large for exhaustive search");
    }
    out.method = NacConstructionMethod::PrismDecomposition;
    out.colouring = detail::colour_from_decomposition(g, *rec.decomposition);
    out.decomposition = std::move(rec.decomposition);
    if (!is_nac(g, *out.colouring)) throw Error("constructed colouring is not NAC (internal error)");
    return out;
}

} // namespace rignac
