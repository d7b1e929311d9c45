#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/union_find.hpp"

namespace rignac {

/// Red/blue assignment indexed by canonical edge order; true means red.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(int m, bool red = false) : red_(m, red) {}
    explicit EdgeColouring(std::vector<bool> red) : red_(std::move(red)) {}

    int size() const noexcept { return static_cast<int>(red_.size()); }
    bool red(int e) const { return red_.at(e); }
    bool blue(int e) const { return !red_.at(e); }
    void set_red(int e, bool value = true) { red_.at(e) = value; }

    int red_count() const noexcept {
        int k = 0;
        for (bool b : red_) k += b;
        return k;
    }
    bool surjective() const noexcept {
        int r = red_count();
        return r > 0 && r < size();
    }

    /// Colour swap.
    EdgeColouring swapped() const {
        EdgeColouring c = *this;
        c.red_.flip();
        return c;
    }

    std::vector<int> red_edges() const { return edges_of(true); }
    std::vector<int> blue_edges() const { return edges_of(false); }

    /// "0101..." with one character per edge, 1 for red.
    std::string bits() const {
        std::string s;
        for (bool b : red_) s += b ? '1' : '0';
        return s;
    }

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;
    friend auto operator<=>(const EdgeColouring& a, const EdgeColouring& b) { return a.red_ <=> b.red_; }

private:
    std::vector<int> edges_of(bool red) const {
        std::vector<int> out;
        for (int e = 0; e < size(); ++e)
            if (red_[e] == red) out.push_back(e);
        return out;
    }

    std::vector<bool> red_;
};

namespace detail {

inline void require_length(const Graph& g, const EdgeColouring& c) {
    if (c.size() != g.edge_count())
        throw PreconditionError("colouring has " + std::to_string(c.size()) + " entries but the graph has " +
                                std::to_string(g.edge_count()) + " edges");
}

} // namespace detail

/// True iff some cycle has exactly one edge of some colour, i.e. some edge
/// joins two vertices of one monochromatic component of the other colour.
inline bool has_almost_monochromatic_cycle(const Graph& g, const EdgeColouring& c) {
    detail::require_length(g, c);
    RollbackUnionFind red(g.vertex_count()), blue(g.vertex_count());
    for (int e = 0; e < g.edge_count(); ++e) (c.red(e) ? red : blue).unite(g.edge(e).u, g.edge(e).v);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& other = c.red(e) ? blue : red;
        if (other.same(g.edge(e).u, g.edge(e).v)) return true;
    }
    return false;
}

inline bool is_nac(const Graph& g, const EdgeColouring& c) {
    detail::require_length(g, c);
    return c.surjective() && !has_almost_monochromatic_cycle(g, c);
}

/// NAP check by the endvertex criterion: every edge has an endpoint all of
/// whose edges share one colour.
inline bool is_nap(const Graph& g, const EdgeColouring& c) {
    detail::require_length(g, c);
    if (!c.surjective()) return false;
    const int n = g.vertex_count();
    std::vector<char> sees_red(n, 0), sees_blue(n, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto& seen = c.red(e) ? sees_red : sees_blue;
        seen[g.edge(e).u] = seen[g.edge(e).v] = 1;
    }
    auto mono = [&](int v) { return !(sees_red[v] && sees_blue[v]); };
    for (const auto& e : g.edges())
        if (!mono(e.u) && !mono(e.v)) return false;
    return true;
}

/// Colours the first side red and the second blue.
inline EdgeColouring nap_from_separation(const Graph& g, const Separation& sep) {
    if (!is_stable_set(g, sep.shared_vertices()))
        throw PreconditionError("separation is not stable: two shared vertices are adjacent");
    EdgeColouring c(g.edge_count());
    for (int e : sep.edges1()) c.set_red(e);
    return c;
}

/// The red/blue edge partition of a NAP-colouring, red side first.
inline Separation separation_from_nap(const Graph& g, const EdgeColouring& c) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw PreconditionError("graph has an isolated vertex");
    if (!is_nap(g, c)) throw PreconditionError("colouring is not a NAP-colouring");
    return Separation(g, c.red_edges(), c.blue_edges());
}

/// Stable separation induced by a stable cut: the edges touching the
/// component of G - cut holding the smallest non-cut vertex, against the rest.
inline Separation separation_from_stable_cut(const Graph& g, const VertexSet& cut) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw PreconditionError("graph has an isolated vertex");
    if (!is_stable_cut(g, cut)) throw PreconditionError("vertex set is not a stable cut");
    auto label = detail::component_labels(g, &cut);
    int first = 0;
    while (cut.contains(first)) ++first;
    std::vector<int> side1, side2;
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edge(e);
        bool inside = (!cut.contains(u) && label[u] == label[first]) || (!cut.contains(v) && label[v] == label[first]);
        (inside ? side1 : side2).push_back(e);
    }
    return Separation(g, std::move(side1), std::move(side2));
}

} // namespace rignac
