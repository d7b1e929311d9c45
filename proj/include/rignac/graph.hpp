#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rignac/error.hpp"

namespace rignac {

/// Undirected edge with u < v once stored in a Graph.
struct Edge {
    int u = 0;
    int v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of the vertex range 0..n-1, stored as a packed bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
    VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }
    VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
        for (int v : members) insert(v);
    }

    int universe() const noexcept { return universe_; }

    bool contains(int v) const noexcept {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int count() const noexcept {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    /// Members in increasing order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                out.push_back(static_cast<int>(i * 64 + b));
                w &= w - 1;
            }
        }
        return out;
    }

    VertexSet complement() const {
        VertexSet out(universe_);
        for (int v = 0; v < universe_; ++v)
            if (!contains(v)) out.insert(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    void check(int v) const {
        if (v < 0 || v >= universe_) out_of_range(v);
    }
    [[noreturn]] static void out_of_range(int v) {
        throw PreconditionError("vertex " + std::to_string(v) + " outside vertex range");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically on (u, v) with u < v; the position
/// of an edge in that list is its index, and every colouring bitmask, edge set
/// and serialized report in the library refers to this order.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an arbitrary edge list. Endpoints are normalized to
    /// u < v; loops, duplicates and out-of-range endpoints are rejected.
    Graph(int n, std::vector<Edge> edges) : n_(n) {
        if (n < 0) throw PreconditionError("negative vertex count");
        for (auto& e : edges) {
            if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u < 0 || e.v >= n)
                throw PreconditionError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        ") outside vertex range");
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw PreconditionError("duplicate edge (" + std::to_string(edges[i].u) + "," +
                                        std::to_string(edges[i].v) + ")");
        edges_ = std::move(edges);
        adjacency_.assign(n_, {});
        for (const auto& e : edges_) {
            adjacency_[e.u].push_back(e.v);
            adjacency_[e.v].push_back(e.u);
        }
        for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(int index) const { return edges_.at(index); }
    const std::vector<int>& neighbours(int v) const { return adjacency_.at(v); }
    int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }

    bool adjacent(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
        const auto& nb = adjacency_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Index of edge uv in canonical order, if present.
    std::optional<int> edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) return std::nullopt;
        return static_cast<int>(it - edges_.begin());
    }

    VertexSet neighbourhood(int v) const { return VertexSet(n_, adjacency_.at(v)); }

    /// Neighbourhood as a word mask; only meaningful when n <= 64.
    std::uint64_t neighbour_mask(int v) const {
        std::uint64_t m = 0;
        for (int w : adjacency_.at(v)) m |= std::uint64_t{1} << w;
        return m;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
};

/// Edge bipartition {E1, E2} of a graph without isolated vertices.
///
/// Each side must own a vertex the other side does not touch; the shared
/// vertex set is derived from the edge sets.
class Separation {
public:
    Separation(const Graph& g, std::vector<int> edges1, std::vector<int> edges2)
        : edges1_(std::move(edges1)), edges2_(std::move(edges2)) {
        std::sort(edges1_.begin(), edges1_.end());
        std::sort(edges2_.begin(), edges2_.end());
        std::vector<char> seen(g.edge_count(), 0);
        for (auto* side : {&edges1_, &edges2_})
            for (int e : *side) {
                if (e < 0 || e >= g.edge_count()) throw PreconditionError("separation edge index out of range");
                if (seen[e]) throw PreconditionError("separation edge sets overlap");
                seen[e] = 1;
            }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw PreconditionError("separation edge sets do not cover the edge set");
        if (edges1_.empty() || edges2_.empty()) throw PreconditionError("separation side is empty");
        auto v1 = touched(g, edges1_);
        auto v2 = touched(g, edges2_);
        bool only1 = false, only2 = false;
        shared_ = VertexSet(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (v1.contains(v) && v2.contains(v)) shared_.insert(v);
            only1 |= v1.contains(v) && !v2.contains(v);
            only2 |= v2.contains(v) && !v1.contains(v);
        }
        if (!only1 || !only2) throw PreconditionError("separation side has no private vertex");
    }

    const std::vector<int>& edges1() const noexcept { return edges1_; }
    const std::vector<int>& edges2() const noexcept { return edges2_; }
    const VertexSet& shared_vertices() const noexcept { return shared_; }

private:
    static VertexSet touched(const Graph& g, const std::vector<int>& es) {
        VertexSet s(g.vertex_count());
        for (int e : es) {
            s.insert(g.edge(e).u);
            s.insert(g.edge(e).v);
        }
        return s;
    }

    std::vector<int> edges1_;
    std::vector<int> edges2_;
    VertexSet shared_;
};

// ---------------------------------------------------------------------------
// Connectivity

namespace detail {

inline std::vector<int> component_labels(const Graph& g, const VertexSet* removed = nullptr) {
    std::vector<int> label(g.vertex_count(), -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != -1 || (removed && removed->contains(s))) continue;
        label[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : g.neighbours(x))
                if (label[y] == -1 && !(removed && removed->contains(y))) {
                    label[y] = next;
                    stack.push_back(y);
                }
        }
        ++next;
    }
    return label;
}

} // namespace detail

/// Vertex partition into connected components, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    auto label = detail::component_labels(g);
    int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<VertexSet> out(k, VertexSet(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) out[label[v]].insert(v);
    return out;
}

inline int component_count(const Graph& g) {
    auto label = detail::component_labels(g);
    return label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

/// Number of components of G - X.
inline int components_after_removal(const Graph& g, const VertexSet& removed) {
    auto label = detail::component_labels(g, &removed);
    int k = -1;
    for (int l : label) k = std::max(k, l);
    return k + 1;
}

inline bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (const auto& e : g.edges())
        if (s.contains(e.u) && s.contains(e.v)) return false;
    return true;
}

/// True iff G - X is disconnected (at least two components).
inline bool is_cut(const Graph& g, const VertexSet& x) { return components_after_removal(g, x) >= 2; }

inline bool is_stable_cut(const Graph& g, const VertexSet& x) { return is_stable_set(g, x) && is_cut(g, x); }

/// Blocks (maximal 2-connected subgraphs and bridges) as sorted edge-index
/// sets, ordered by smallest edge index. Rejects isolated vertices.
inline std::vector<std::vector<int>> blocks(const Graph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) throw PreconditionError("isolated vertex " + std::to_string(v) + " belongs to no block");

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::vector<std::vector<int>> out;
    int timer = 0;

    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& f = stack.back();
            const auto& nb = g.neighbours(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                int e = *g.edge_index(f.v, w);
                if (e == f.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) break;
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[done.v]);
                if (low[done.v] >= disc[parent]) {
                    std::vector<int> block;
                    while (true) {
                        int e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == done.parent_edge) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.push_back(std::move(block));
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

/// Cut vertices (articulation points) in increasing order.
inline std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> out;
    const int base = component_count(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) continue;
        VertexSet x(g.vertex_count(), {v});
        if (components_after_removal(g, x) > base) out.push_back(v);
    }
    return out;
}

/// Connected, at least three vertices and no cut vertex.
inline bool is_2connected(const Graph& g) {
    return g.vertex_count() >= 3 && is_connected(g) && cut_vertices(g).empty();
}

// ---------------------------------------------------------------------------
// Derived graphs

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (pos[e.u] >= 0 && pos[e.v] >= 0) es.push_back({pos[e.u], pos[e.v]});
    return Graph(static_cast<int>(vertices.size()), std::move(es));
}

/// Edge-induced subgraph together with the original id of each new vertex.
struct EdgeSubgraph {
    Graph graph;
    std::vector<int> original;
};

inline EdgeSubgraph edge_subgraph(const Graph& g, std::span<const int> edge_indices) {
    std::vector<int> pos(g.vertex_count(), -1);
    for (int e : edge_indices) {
        pos[g.edge(e).u] = 0;
        pos[g.edge(e).v] = 0;
    }
    std::vector<int> original;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (pos[v] == 0) {
            pos[v] = static_cast<int>(original.size());
            original.push_back(v);
        }
    std::vector<Edge> es;
    for (int e : edge_indices) es.push_back({pos[g.edge(e).u], pos[g.edge(e).v]});
    return {Graph(static_cast<int>(original.size()), std::move(es)), std::move(original)};
}

inline Graph with_edges_added(const Graph& g, std::span<const Edge> extra) {
    std::vector<Edge> es = g.edges();
    for (auto e : extra) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!g.adjacent(e.u, e.v) && std::find(es.begin(), es.end(), e) == es.end()) es.push_back(e);
    }
    return Graph(g.vertex_count(), std::move(es));
}

inline Graph with_edge_removed(const Graph& g, int edge_index) {
    std::vector<Edge> es = g.edges();
    es.erase(es.begin() + edge_index);
    return Graph(g.vertex_count(), std::move(es));
}

/// Removes the given vertices and relabels the survivors compactly in
/// increasing order.
inline Graph without_vertices(const Graph& g, const VertexSet& removed) {
    std::vector<int> keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!removed.contains(v)) keep.push_back(v);
    return induced_subgraph(g, keep);
}

/// Result of contracting one edge.
struct Contraction {
    Graph graph;
    int merged = 0;                 ///< id of the merged vertex in `graph`
    std::vector<int> old_to_new;    ///< image of every old vertex
};

/// Contracts edge e = uv (u < v). The merged vertex keeps id u; vertices above
/// v shift down by one; parallel edges collapse.
inline Contraction contract_edge(const Graph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw PreconditionError("edge index out of range");
    const auto [u, v] = g.edge(e);
    std::vector<int> map(g.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) map[x] = x == v ? u : (x > v ? x - 1 : x);
    std::vector<Edge> es;
    for (const auto& f : g.edges()) {
        int a = map[f.u], b = map[f.v];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        es.push_back({a, b});
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return {Graph(g.vertex_count() - 1, std::move(es)), u, std::move(map)};
}

/// Relabels vertices: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm) {
    std::vector<Edge> es;
    for (const auto& e : g.edges()) es.push_back({perm[e.u], perm[e.v]});
    return Graph(g.vertex_count(), std::move(es));
}

/// Disjoint union, second graph shifted after the first.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const auto& e : b.edges()) es.push_back({e.u + a.vertex_count(), e.v + a.vertex_count()});
    return Graph(a.vertex_count() + b.vertex_count(), std::move(es));
}

} // namespace rignac
