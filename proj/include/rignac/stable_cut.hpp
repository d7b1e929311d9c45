#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/rigidity.hpp"

namespace rignac {

/// Largest vertex count accepted by exhaustive_stable_cut.
inline constexpr int kExhaustiveStableCutLimit = 24;

struct StableCutResult {
    VertexSet cut;
    std::optional<std::pair<int, int>> separated;  ///< u and v lie in different components of G - cut
    std::optional<int> avoided;                    ///< vertex guaranteed not to be in the cut
};

struct StableCutConstraints {
    std::optional<std::pair<int, int>> separate;
    std::optional<int> avoid;
    bool at_most_one_per_rigid_component = false;
};

/// Re-checks a result from scratch: stable, a cut, and the recorded
/// separation/avoidance claims.
inline bool validate_stable_cut(const Graph& g, const StableCutResult& r) {
    if (r.cut.universe() != g.vertex_count()) return false;
    if (!is_stable_set(g, r.cut) || !is_cut(g, r.cut)) return false;
    if (r.avoided && r.cut.contains(*r.avoided)) return false;
    if (r.separated) {
        auto [u, v] = *r.separated;
        if (r.cut.contains(u) || r.cut.contains(v)) return false;
        auto label = detail::component_labels(g, &r.cut);
        if (label[u] == label[v]) return false;
    }
    return true;
}

/// Number of vertices of `cut` inside each rigid component, maximized.
inline int max_cut_vertices_per_rigid_component(const RigidityReport& report, const VertexSet& cut) {
    int best = 0;
    for (const auto& c : report.rigid_components) {
        int k = 0;
        for (int v : cut.members()) k += c.contains(v);
        best = std::max(best, k);
    }
    return best;
}

/// Minimum-cardinality stable cut meeting the constraints, lexicographically
/// smallest among those; nullopt if none exists. Exponential; n <= 24.
inline std::optional<StableCutResult> exhaustive_stable_cut(const Graph& g, const StableCutConstraints& cons = {}) {
    const int n = g.vertex_count();
    if (n > kExhaustiveStableCutLimit)
        throw LimitError("exhaustive_stable_cut supports at most " + std::to_string(kExhaustiveStableCutLimit) +
                         " vertices");
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbour_mask(v);
    const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);

    std::uint64_t forbidden = 0;
    if (cons.avoid) forbidden |= 1ULL << *cons.avoid;
    if (cons.separate) forbidden |= (1ULL << cons.separate->first) | (1ULL << cons.separate->second);

    std::vector<std::uint64_t> comp_masks;
    if (cons.at_most_one_per_rigid_component) {
        auto rep = rigidity_report(g);
        for (const auto& c : rep.rigid_components) {
            std::uint64_t m = 0;
            for (int v : c.members()) m |= 1ULL << v;
            comp_masks.push_back(m);
        }
    }

    auto reach = [&](std::uint64_t from, std::uint64_t allowed) {
        std::uint64_t seen = from, frontier = from;
        while (frontier) {
            int x = std::countr_zero(frontier);
            frontier &= frontier - 1;
            auto nb = adj[x] & allowed & ~seen;
            seen |= nb;
            frontier |= nb;
        }
        return seen;
    };
    auto accepts = [&](std::uint64_t cut) {
        std::uint64_t rest = all & ~cut;
        if (!rest) return false;
        if (cons.separate) {
            auto [u, v] = *cons.separate;
            return !((reach(1ULL << u, rest) >> v) & 1);
        }
        return reach(rest & -rest, rest) != rest;
    };

    std::optional<std::uint64_t> found;
    // Stable sets of exactly `size` vertices, in lexicographic order.
    auto dfs = [&](auto&& self, int start, int size, std::uint64_t cut, std::uint64_t blocked) -> bool {
        if (size == 0) {
            if (accepts(cut)) {
                found = cut;
                return true;
            }
            return false;
        }
        for (int v = start; v <= n - size; ++v) {
            if ((blocked >> v) & 1) continue;
            std::uint64_t bit = 1ULL << v;
            std::uint64_t nb = blocked | adj[v] | bit;
            for (auto m : comp_masks)
                if (m & bit) nb |= m;
            if (self(self, v + 1, size - 1, cut | bit, nb)) return true;
        }
        return false;
    };
    for (int size = 0; size <= n && !found; ++size)
        if (dfs(dfs, 0, size, 0, forbidden)) break;
    if (!found) return std::nullopt;

    StableCutResult r;
    r.cut = VertexSet(n);
    for (int v = 0; v < n; ++v)
        if ((*found >> v) & 1) r.cut.insert(v);
    r.separated = cons.separate;
    r.avoided = cons.avoid;
    return r;
}

/// Cost counters for algorithm1_stable_cut.
struct Algorithm1Stats {
    int levels = 0;            ///< recursion levels (contractions + 1)
    std::uint64_t work = 0;    ///< pebble-search steps plus edges touched by completion/contraction
};

/// Stable cut of a connected flexible graph separating u and v, where no
/// rigid component contains both.
///
/// Each level completes the rigid components, returns N(u) when it is
/// stable, and otherwise contracts u into one of the two vertices of the
/// lexicographically smallest triangle at u, keeping the contraction in which
/// the merged vertex and v still lie in different rigid components.
inline StableCutResult algorithm1_stable_cut(const Graph& g, int u, int v, Algorithm1Stats* stats = nullptr) {
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("vertex outside vertex range");
    if (u == v) throw PreconditionError("u and v must be distinct");
    if (!is_connected(g)) throw PreconditionError("graph is not connected");
    Algorithm1Stats local;
    auto& st = stats ? *stats : local;
    auto report = rigidity_report(g, &st.work);
    if (!report.is_flexible) throw PreconditionError("graph is not flexible (it is rigid)");
    if (report.share_component(u, v))
        throw PreconditionError("u and v lie in a common rigid component; no stable cut separates them");

    Graph work = g;
    std::vector<int> original(n);
    for (int x = 0; x < n; ++x) original[x] = x;
    int cu = u, cv = v;
    while (true) {
        ++st.levels;
        Graph full = complete_rigid_components(work, report);
        st.work += static_cast<std::uint64_t>(full.edge_count());
        const auto& nu = full.neighbours(cu);
        int x1 = -1, x2 = -1;
        for (std::size_t i = 0; i < nu.size() && x1 < 0; ++i)
            for (std::size_t j = i + 1; j < nu.size(); ++j)
                if (full.adjacent(nu[i], nu[j])) {
                    x1 = nu[i];
                    x2 = nu[j];
                    break;
                }
        if (x1 < 0) {
            StableCutResult r;
            r.cut = VertexSet(n);
            for (int x : nu) r.cut.insert(original[x]);
            r.separated = std::pair{u, v};
            return r;
        }
        bool advanced = false;
        for (int x : {x1, x2}) {
            auto c = contract_edge(full, *full.edge_index(cu, x));
            st.work += static_cast<std::uint64_t>(full.edge_count());
            int nv = c.old_to_new[cv];
            auto rep = rigidity_report(c.graph, &st.work);
            if (rep.share_component(c.merged, nv)) continue;
            std::vector<int> orig(c.graph.vertex_count());
            for (int y = 0; y < work.vertex_count(); ++y) orig[c.old_to_new[y]] = original[y];
            orig[c.merged] = original[cu];
            original = std::move(orig);
            work = std::move(c.graph);
            report = std::move(rep);
            cu = c.merged;
            cv = nv;
            advanced = true;
            break;
        }
        if (!advanced) throw Error("algorithm1_stable_cut: neither contraction separates the pair (internal error)");
    }
}

/// Stable cut avoiding v in a 2-connected flexible graph. Tries partners u
/// in increasing order among vertices sharing no rigid component with v.
inline StableCutResult stable_cut_avoiding(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw PreconditionError("vertex outside vertex range");
    if (!is_2connected(g)) throw PreconditionError("graph is not 2-connected");
    auto report = rigidity_report(g);
    if (!report.is_flexible) throw PreconditionError("graph is not flexible (it is rigid)");
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (u == v || report.share_component(u, v)) continue;
        auto r = algorithm1_stable_cut(g, u, v);
        if (r.cut.contains(v)) continue;
        r.avoided = v;
        return r;
    }
    throw Error("stable_cut_avoiding: no partner vertex found (internal error)");
}

/// Stable cut of any graph when one exists: the empty cut for disconnected
/// graphs, Algorithm 1 for connected flexible graphs, exhaustive search
/// otherwise (n <= 24).
inline std::optional<StableCutResult> find_stable_cut(const Graph& g) {
    if (!is_connected(g)) return StableCutResult{VertexSet(g.vertex_count()), std::nullopt, std::nullopt};
    if (g.vertex_count() < 3) return std::nullopt;
    auto report = rigidity_report(g);
    if (report.is_flexible) {
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = u + 1; v < g.vertex_count(); ++v)
                if (!report.share_component(u, v)) return algorithm1_stable_cut(g, u, v);
    }
    return exhaustive_stable_cut(g);
}

} // namespace rignac
