#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Graph container and stay as close to
// the definitions as practical: subsets are enumerated, cycles and paths are
// searched directly, nothing is pruned.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rignac/graph.hpp"

namespace oracle {

using rignac::Edge;
using rignac::Graph;

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

/// Every vertex subset X with |X| >= 2 spans at most 2|X| - 3 of the edges.
inline bool sparse(int n, const std::vector<Edge>& es) {
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        int k = popcount(x);
        if (k < 2) continue;
        int inside = 0;
        for (const auto& e : es) inside += ((x >> e.u) & 1) && ((x >> e.v) & 1);
        if (inside > 2 * k - 3) return false;
    }
    return true;
}

/// Greedy basis of the sparsity matroid.
inline int rank(const Graph& g) {
    std::vector<Edge> basis;
    for (const auto& e : g.edges()) {
        basis.push_back(e);
        if (!sparse(g.vertex_count(), basis)) basis.pop_back();
    }
    return static_cast<int>(basis.size());
}

inline Graph induced(const Graph& g, std::uint64_t mask, std::vector<int>* ids = nullptr) {
    std::vector<int> map(g.vertex_count(), -1);
    int k = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if ((mask >> v) & 1) {
            map[v] = k++;
            if (ids) ids->push_back(v);
        }
    std::vector<Edge> es;
    for (const auto& e : g.edges())
        if (map[e.u] >= 0 && map[e.v] >= 0) es.push_back({map[e.u], map[e.v]});
    return Graph(k, std::move(es));
}

/// Maximal vertex sets inducing a rigid subgraph on at least one edge,
/// sorted.
inline std::vector<std::vector<int>> rigid_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::uint64_t> rigid;
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
        int k = popcount(x);
        if (k < 2) continue;
        Graph h = induced(g, x);
        if (rank(h) == 2 * k - 3) rigid.push_back(x);
    }
    std::vector<std::vector<int>> out;
    for (auto x : rigid) {
        bool maximal = true;
        for (auto y : rigid)
            if (y != x && (x & y) == x) maximal = false;
        if (!maximal) continue;
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if ((x >> v) & 1) vs.push_back(v);
        out.push_back(vs);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Components of the graph restricted to `alive` vertices, BFS.
inline int components(const Graph& g, std::uint64_t alive) {
    int count = 0;
    std::uint64_t seen = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (!((alive >> s) & 1) || ((seen >> s) & 1)) continue;
        ++count;
        std::vector<int> queue{s};
        seen |= 1ULL << s;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int w : g.neighbours(queue[i]))
                if (((alive >> w) & 1) && !((seen >> w) & 1)) {
                    seen |= 1ULL << w;
                    queue.push_back(w);
                }
    }
    return count;
}

inline std::uint64_t all(int n) { return n == 64 ? ~0ULL : (1ULL << n) - 1; }

inline bool stable(const Graph& g, std::uint64_t s) {
    for (const auto& e : g.edges())
        if (((s >> e.u) & 1) && ((s >> e.v) & 1)) return false;
    return true;
}

/// All stable cuts as vertex masks.
inline std::vector<std::uint64_t> stable_cuts(const Graph& g) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (1ULL << g.vertex_count()); ++s)
        if (stable(g, s) && components(g, all(g.vertex_count()) & ~s) >= 2) out.push_back(s);
    return out;
}

/// Vertices reachable from s using only edges of the given colour.
inline std::uint64_t mono_reach(const Graph& g, const std::vector<int>& colour, int c, int s, int skip_edge) {
    std::uint64_t seen = 1ULL << s;
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int e = 0; e < g.edge_count(); ++e) {
            if (e == skip_edge || colour[e] != c) continue;
            auto [a, b] = g.edge(e);
            int y = a == x ? b : (b == x ? a : -1);
            if (y >= 0 && !((seen >> y) & 1)) {
                seen |= 1ULL << y;
                stack.push_back(y);
            }
        }
    }
    return seen;
}

/// NAC by the cycle definition: surjective, and no cycle carries exactly one
/// edge of some colour (an edge whose endpoints are joined by a path of the
/// other colour).
inline bool nac(const Graph& g, const std::vector<int>& colour) {
    bool red = false, blue = false;
    for (int c : colour) (c ? red : blue) = true;
    if (!red || !blue) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        if ((mono_reach(g, colour, 1 - colour[e], u, e) >> v) & 1) return false;
    }
    return true;
}

/// Number of NAC-colourings divided by two, over all 2^m colourings.
inline std::uint64_t nnac(const Graph& g) {
    const int m = g.edge_count();
    std::uint64_t count = 0;
    std::vector<int> colour(m);
    for (std::uint64_t bits = 0; bits < (1ULL << m); ++bits) {
        for (int e = 0; e < m; ++e) colour[e] = (bits >> e) & 1;
        count += nac(g, colour);
    }
    return count / 2;
}

/// NAP by definition: surjective, triangles monochromatic, no path
/// a-b-c-d (distinct vertices) coloured x, y, x with x != y.
inline bool nap(const Graph& g, const std::vector<int>& colour) {
    bool red = false, blue = false;
    for (int c : colour) (c ? red : blue) = true;
    if (!red || !blue) return false;
    const int n = g.vertex_count();
    auto col = [&](int a, int b) { return colour[*g.edge_index(a, b)]; };
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbours(a))
            for (int c : g.neighbours(b)) {
                if (c == a) continue;
                if (g.adjacent(a, c) && (col(a, b) != col(b, c) || col(a, c) != col(a, b))) return false;
                for (int d : g.neighbours(c)) {
                    if (d == a || d == b) continue;
                    if (col(a, b) == col(c, d) && col(a, b) != col(b, c)) return false;
                }
            }
    return true;
}

/// Isomorphism by trying every permutation.
inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> p(a.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::set<std::pair<int, int>> target;
    for (const auto& e : b.edges()) target.insert({e.u, e.v});
    do {
        bool ok = true;
        for (const auto& e : a.edges()) {
            int x = p[e.u], y = p[e.v];
            if (!target.count({std::min(x, y), std::max(x, y)})) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// graph6 encoder written from the format description.
inline std::string graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j));
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (int t = 0; t < 6; ++t) v = v * 2 + bits[k + t];
        out += static_cast<char>(63 + v);
    }
    return out;
}

/// No vertex removal disconnects the graph (n >= 3, connected).
inline bool two_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || components(g, all(n)) != 1) return false;
    for (int v = 0; v < n; ++v)
        if (components(g, all(n) & ~(1ULL << v)) != 1) return false;
    return true;
}

/// Exhaustive 0-extension search without memoization: the fewest open steps
/// over all construction orders, or -1.
inline int min_open_steps(const Graph& g, std::uint64_t alive) {
    int k = popcount(alive);
    if (k == 2) {
        int a = __builtin_ctzll(alive), b = __builtin_ctzll(alive & (alive - 1));
        return g.adjacent(a, b) ? 0 : -1;
    }
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!((alive >> v) & 1)) continue;
        std::vector<int> nb;
        for (int w : g.neighbours(v))
            if ((alive >> w) & 1) nb.push_back(w);
        if (nb.size() != 2) continue;
        int sub = min_open_steps(g, alive & ~(1ULL << v));
        if (sub < 0) continue;
        int total = sub + (g.adjacent(nb[0], nb[1]) ? 0 : 1);
        if (best < 0 || total < best) best = total;
    }
    return best;
}

/// Random connected graph: a random spanning tree plus extra edges, each
/// present with probability p.
inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> es;
    std::set<std::pair<int, int>> have;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        es.push_back({u, v});
        have.insert({u, v});
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!have.count({u, v}) && coin(rng)) es.push_back({u, v});
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (auto& e : es) e = {std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])};
    return Graph(n, std::move(es));
}

} // namespace oracle
