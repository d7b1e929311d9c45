#pragma once

#include <cstdint>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/pebble_game.hpp"

namespace rignac {

/// Size of a maximum (2,3)-sparse edge subset, i.e. 2n - 3 minus the number of
/// edges that must be added to make g rigid. Requires n >= 2.
inline int rank(const Graph& g) {
    if (g.vertex_count() < 2) throw PreconditionError("rank is defined for graphs on at least two vertices");
    PebbleGame game(g.vertex_count());
    for (const auto& e : g.edges()) game.insert(e.u, e.v);
    return game.accepted_count();
}

struct RigidityReport {
    int rank = 0;
    /// Maximal rigid subgraphs as vertex sets, ordered by their smallest edge
    /// index. Together they partition the edge set.
    std::vector<VertexSet> rigid_components;
    bool is_rigid = false;
    bool is_minimally_rigid = false;
    bool is_flexible = false;

    int component_count() const noexcept { return static_cast<int>(rigid_components.size()); }

    /// True iff some rigid component contains both u and v.
    bool share_component(int u, int v) const {
        for (const auto& c : rigid_components)
            if (c.contains(u) && c.contains(v)) return true;
        return false;
    }

    /// Index of the rigid component containing edge uv.
    int component_of_edge(int u, int v) const {
        for (std::size_t i = 0; i < rigid_components.size(); ++i)
            if (rigid_components[i].contains(u) && rigid_components[i].contains(v)) return static_cast<int>(i);
        return -1;
    }
};

/// Rank, rigid components and rigidity verdicts. A single vertex counts as
/// rigid but not minimally rigid.
inline RigidityReport rigidity_report(const Graph& g, std::uint64_t* work = nullptr) {
    const int n = g.vertex_count();
    if (n < 1) throw PreconditionError("rigidity_report needs at least one vertex");
    RigidityReport r;
    if (n == 1) {
        r.is_rigid = true;
        return r;
    }
    PebbleGame game(n);
    for (const auto& e : g.edges()) game.insert(e.u, e.v);
    r.rank = game.accepted_count();

    std::vector<char> assigned(g.edge_count(), 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (assigned[i]) continue;
        const auto [u, v] = g.edge(i);
        auto comp = game.component_of(u, v);
        VertexSet set(n);
        for (int x = 0; x < n; ++x)
            if (comp[x]) set.insert(x);
        for (int j = i; j < g.edge_count(); ++j)
            if (comp[g.edge(j).u] && comp[g.edge(j).v]) assigned[j] = 1;
        r.rigid_components.push_back(std::move(set));
    }
    r.is_rigid = r.rank == 2 * n - 3;
    r.is_minimally_rigid = r.is_rigid && g.edge_count() == 2 * n - 3;
    r.is_flexible = !r.is_rigid;
    if (work) *work += game.work();
    return r;
}

inline bool is_rigid(const Graph& g) { return g.vertex_count() <= 1 || rank(g) == 2 * g.vertex_count() - 3; }

inline bool is_minimally_rigid(const Graph& g) {
    return g.vertex_count() >= 2 && g.edge_count() == 2 * g.vertex_count() - 3 && rank(g) == g.edge_count();
}

/// Adds every missing edge inside each rigid component; the rigid components
/// of the result have the same vertex sets.
inline Graph complete_rigid_components(const Graph& g, const RigidityReport& r) {
    std::vector<Edge> extra;
    for (const auto& c : r.rigid_components) {
        auto mem = c.members();
        for (std::size_t i = 0; i < mem.size(); ++i)
            for (std::size_t j = i + 1; j < mem.size(); ++j)
                if (!g.adjacent(mem[i], mem[j])) extra.push_back({mem[i], mem[j]});
    }
    return with_edges_added(g, extra);
}

} // namespace rignac
