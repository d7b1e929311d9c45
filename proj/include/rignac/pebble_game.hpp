#pragma once

#include <cstdint>
#include <vector>

#include "rignac/graph.hpp"

namespace rignac {

/// (2,3)-pebble game on a fixed vertex set.
///
/// Every vertex starts with two pebbles. An edge uv is accepted when four
/// pebbles can be gathered on {u, v}; it is then oriented away from the vertex
/// whose pebble covers it. Invariant: free pebbles + accepted edges = 2n, and
/// the accepted edges are (2,3)-sparse.
class PebbleGame {
public:
    explicit PebbleGame(int n) : pebbles_(n, 2), out_(n) {}

    int vertex_count() const noexcept { return static_cast<int>(pebbles_.size()); }
    int accepted_count() const noexcept { return accepted_; }
    int pebbles(int v) const { return pebbles_.at(v); }
    const std::vector<int>& out_edges(int v) const { return out_.at(v); }

    /// Elementary search steps spent so far (vertex visits during pebble
    /// searches); used for empirical cost measurements.
    std::uint64_t work() const noexcept { return work_; }

    /// Tries to accept edge uv. Returns false when uv is spanned by the
    /// accepted edges (dependent in the rigidity matroid).
    bool insert(int u, int v) {
        if (!gather_four(u, v)) return false;
        --pebbles_[u];
        out_[u].push_back(v);
        ++accepted_;
        return true;
    }

    /// True iff uv (not necessarily an edge) is independent of the accepted
    /// edges. Reorients edges but never changes the accepted set.
    bool independent(int u, int v) {
        if (u == v) return false;
        return gather_four(u, v);
    }

    /// Gathers as many pebbles as possible on {u, v} (three for any pair
    /// spanned by the accepted edges) and returns the total.
    int gather_pair(int u, int v) {
        while (pebbles_[u] < 2 && gather_one(u, u, v)) {}
        while (pebbles_[v] < 2 && gather_one(v, u, v)) {}
        while (pebbles_[u] < 2 && gather_one(u, u, v)) {}
        return pebbles_[u] + pebbles_[v];
    }

    /// Vertex set of the rigid component containing the accepted edge uv.
    ///
    /// With three pebbles held on {u, v}, a vertex belongs to the component
    /// iff it cannot reach a free pebble elsewhere along out-edges.
    std::vector<char> component_of(int u, int v) {
        gather_pair(u, v);
        const int n = vertex_count();
        std::vector<std::vector<int>> in(n);
        for (int x = 0; x < n; ++x)
            for (int y : out_[x]) in[y].push_back(x);
        std::vector<char> bad(n, 0);
        std::vector<int> stack;
        for (int x = 0; x < n; ++x)
            if (x != u && x != v && pebbles_[x] > 0) {
                bad[x] = 1;
                stack.push_back(x);
            }
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++work_;
            for (int y : in[x])
                if (!bad[y]) {
                    bad[y] = 1;
                    stack.push_back(y);
                }
        }
        std::vector<char> comp(n, 0);
        for (int x = 0; x < n; ++x) comp[x] = !bad[x];
        comp[u] = comp[v] = 1;
        return comp;
    }

private:
    bool gather_four(int u, int v) {
        return gather_pair(u, v) == 4;
    }

    /// Moves one free pebble to `target` along a directed path, never taking
    /// pebbles from the pinned vertices a, b. Returns false if none reachable.
    bool gather_one(int target, int a, int b) {
        const int n = vertex_count();
        std::vector<int> parent(n, -2);
        std::vector<int> stack{target};
        parent[target] = -1;
        int found = -1;
        while (!stack.empty() && found < 0) {
            int x = stack.back();
            stack.pop_back();
            ++work_;
            for (int y : out_[x]) {
                if (parent[y] != -2) continue;
                parent[y] = x;
                if (y != a && y != b && pebbles_[y] > 0) {
                    found = y;
                    break;
                }
                stack.push_back(y);
            }
        }
        if (found < 0) return false;
        // Reverse the path target -> ... -> found.
        --pebbles_[found];
        for (int y = found; parent[y] != -1; y = parent[y]) {
            int x = parent[y];
            auto& ox = out_[x];
            for (auto& w : ox)
                if (w == y) {
                    w = ox.back();
                    ox.pop_back();
                    break;
                }
            out_[y].push_back(x);
        }
        ++pebbles_[target];
        return true;
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
    int accepted_ = 0;
    std::uint64_t work_ = 0;
};

} // namespace rignac
