#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"

namespace rignac {

/// Removal order that reduces a 2-tree to its base edge. Empty `order` with
/// `is_2tree == false` means no such order exists.
struct TwoTreeCertificate {
    bool is_2tree = false;
    std::vector<int> order;   ///< vertices deleted, first to last
    Edge base{};              ///< the surviving edge
};

/// Greedy reduction by deleting degree-2 vertices with adjacent neighbours.
/// Any removable vertex may go first, so one pass decides the question.
inline TwoTreeCertificate two_tree_certificate(const Graph& g) {
    TwoTreeCertificate cert;
    const int n = g.vertex_count();
    if (n < 2 || g.edge_count() != 2 * n - 3) return cert;
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 2) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (!alive[v] || deg[v] != 2) continue;
            int a = -1, b = -1;
            for (int w : g.neighbours(v))
                if (alive[w]) (a < 0 ? a : b) = w;
            if (g.adjacent(a, b)) pick = v;
        }
        if (pick < 0) return cert;
        alive[pick] = 0;
        --remaining;
        for (int w : g.neighbours(pick))
            if (alive[w]) --deg[w];
        cert.order.push_back(pick);
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (alive[v]) (a < 0 ? a : b) = v;
    if (!g.adjacent(a, b)) return cert;
    cert.is_2tree = true;
    cert.base = {a, b};
    return cert;
}

inline bool is_2tree(const Graph& g) { return two_tree_certificate(g).is_2tree; }

struct ZeroExtension {
    Graph graph;
    bool is_open = false;  ///< the two neighbours of the new vertex are non-adjacent
};

/// Adds vertex n adjacent to exactly u and v.
inline ZeroExtension zero_extend(const Graph& g, int u, int v) {
    if (u == v) throw PreconditionError("0-extension needs two distinct vertices");
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("0-extension vertex outside vertex range");
    std::vector<Edge> es = g.edges();
    es.push_back({u, n});
    es.push_back({v, n});
    return {Graph(n + 1, std::move(es)), !g.adjacent(u, v)};
}

/// Replaces v by adjacent vertices v1 (keeps id v) and v2 (new id n), joined
/// to n1 and n2 respectively. Requires n1 ∪ n2 = N(v) and |n1 ∩ n2| = 1.
inline Graph vertex_split(const Graph& g, int v, const VertexSet& n1, const VertexSet& n2) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw PreconditionError("vertex_split: vertex outside vertex range");
    VertexSet nv = g.neighbourhood(v);
    int overlap = 0;
    for (int x = 0; x < n; ++x) {
        bool in1 = n1.contains(x), in2 = n2.contains(x);
        if ((in1 || in2) != nv.contains(x))
            throw PreconditionError("vertex_split: N1 ∪ N2 must equal the neighbourhood of v (vertex " +
                                    std::to_string(x) + ")");
        overlap += in1 && in2;
    }
    if (overlap != 1)
        throw PreconditionError("vertex_split: |N1 ∩ N2| must be 1, got " + std::to_string(overlap));
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (e.u != v && e.v != v) es.push_back(e);
    for (int x : n1.members()) es.push_back({v, x});
    for (int x : n2.members()) es.push_back({n, x});
    es.push_back({v, n});
    return Graph(n + 1, std::move(es));
}

struct ZeroExtensionRecognition {
    bool is_zero_extension_graph = false;
    std::optional<int> min_open_steps;  ///< over all construction orders
};

/// Decides whether g arises from an edge by 0-extensions and, if so, the
/// fewest open steps any construction order needs. Explores every removal
/// order of degree-2 vertices, memoized on the surviving vertex set.
inline ZeroExtensionRecognition recognize_0extension_graph(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw PreconditionError("recognize_0extension_graph needs at least two vertices");
    if (n > 64) throw LimitError("recognize_0extension_graph supports at most 64 vertices");
    ZeroExtensionRecognition out;
    if (g.edge_count() != 2 * n - 3) return out;
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbour_mask(v);
    constexpr int kFail = -1;
    std::unordered_map<std::uint64_t, int> memo;

    auto solve = [&](auto&& self, std::uint64_t alive, int count) -> int {
        if (count == 2) return 0;  // edge count is preserved, so the pair is adjacent
        if (auto it = memo.find(alive); it != memo.end()) return it->second;
        int best = kFail;
        for (auto rest = alive; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            auto nb = adj[v] & alive;
            if (std::popcount(nb) != 2) continue;
            int a = std::countr_zero(nb);
            int b = std::countr_zero(nb & (nb - 1));
            int open = (adj[a] >> b) & 1 ? 0 : 1;
            int sub = self(self, alive & ~(std::uint64_t{1} << v), count - 1);
            if (sub != kFail && (best == kFail || sub + open < best)) best = sub + open;
        }
        memo.emplace(alive, best);
        return best;
    };
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int r = solve(solve, all, n);
    if (r != kFail) {
        out.is_zero_extension_graph = true;
        out.min_open_steps = r;
    }
    return out;
}

} // namespace rignac
