#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rignac/graph.hpp"
#include "rignac/io.hpp"

namespace rignac {

/// Largest vertex count accepted by canonical_form.
inline constexpr int kCanonicalFormLimit = 12;

namespace detail {

using Cells = std::vector<std::vector<int>>;

/// Equitable refinement: splits cells by neighbour counts into every cell
/// until stable. New sub-cells are ordered by signature, so the result is
/// invariant under relabelling.
inline void refine(const std::vector<std::uint64_t>& adj, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::uint64_t> masks;
        masks.reserve(cells.size());
        for (const auto& c : cells) {
            std::uint64_t m = 0;
            for (int v : c) m |= std::uint64_t{1} << v;
            masks.push_back(m);
        }
        Cells next;
        next.reserve(cells.size());
        for (const auto& c : cells) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            sig.reserve(c.size());
            for (int v : c) {
                std::vector<int> s(masks.size());
                for (std::size_t i = 0; i < masks.size(); ++i) s[i] = std::popcount(adj[v] & masks[i]);
                sig.emplace_back(std::move(s), v);
            }
            std::sort(sig.begin(), sig.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= sig.size(); ++i)
                if (i == sig.size() || sig[i].first != sig[start].first) {
                    std::vector<int> cell;
                    for (std::size_t j = start; j < i; ++j) cell.push_back(sig[j].second);
                    std::sort(cell.begin(), cell.end());
                    next.push_back(std::move(cell));
                    start = i;
                }
        }
        if (next.size() != cells.size()) changed = true;
        cells = std::move(next);
    }
}

struct CanonicalSearch {
    const std::vector<std::uint64_t>& adj;
    int n;
    std::vector<std::uint64_t> best_code;
    std::vector<int> best_perm;
    bool have = false;

    void leaf(const Cells& cells) {
        std::vector<int> perm(n);
        for (std::size_t i = 0; i < cells.size(); ++i) perm[cells[i][0]] = static_cast<int>(i);
        std::vector<int> inv(n);
        for (int v = 0; v < n; ++v) inv[perm[v]] = v;
        std::vector<std::uint64_t> code(n, 0);
        for (int i = 0; i < n; ++i) {
            std::uint64_t row = 0;
            auto a = adj[inv[i]];
            while (a) {
                int w = std::countr_zero(a);
                row |= std::uint64_t{1} << perm[w];
                a &= a - 1;
            }
            code[i] = row;
        }
        if (!have || code < best_code) {
            best_code = std::move(code);
            best_perm = std::move(perm);
            have = true;
        }
    }

    bool twins(int u, int v) const {
        std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
        return (adj[u] & ~bv) == (adj[v] & ~bu);
    }

    void search(Cells cells) {
        refine(adj, cells);
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        // Interchangeable twins lead to identical subtrees; branch on one.
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (std::any_of(tried.begin(), tried.end(), [&](int t) { return twins(t, v); })) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }
};

} // namespace detail

/// Canonical relabelling: vertex v of g goes to position result[v]. Isomorphic
/// graphs yield identical relabelled graphs.
inline std::vector<int> canonical_labelling(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kCanonicalFormLimit)
        throw LimitError("canonical_form supports at most " + std::to_string(kCanonicalFormLimit) + " vertices");
    if (n == 0) return {};
    std::vector<std::uint64_t> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbour_mask(v);
    detail::CanonicalSearch s{adj, n, {}, {}, false};
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    s.search({all});
    return s.best_perm;
}

/// Byte string identifying the isomorphism class of g (n <= 12): the graph6
/// encoding of the canonically relabelled graph.
inline std::string canonical_form(const Graph& g) {
    auto perm = canonical_labelling(g);
    return to_graph6(relabel(g, perm));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
           canonical_form(a) == canonical_form(b);
}

} // namespace rignac
