#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "rignac/canonical.hpp"
#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/gsc.hpp"
#include "rignac/io.hpp"
#include "rignac/nac.hpp"
#include "rignac/rigidity.hpp"
#include "rignac/structure.hpp"

namespace rignac {

inline constexpr int kCatalogMaxDefault = 8;
inline constexpr int kCatalogMaxOptIn = 9;

struct CatalogEntry {
    std::string graph6;  ///< canonical form, also the graph6 of `graph`
    Graph graph;         ///< canonical representative
    NacCount nnac = 0;
    bool is_2tree = false;
    bool is_gsc = false;
    std::optional<int> prisms_used;  ///< prism steps in the decomposition found
    int prism_subgraphs = 0;
    bool is_0ext_graph = false;
    std::optional<int> min_open_steps;
};

namespace detail {

/// Canonical forms of every 0-extension and 1-extension of g.
inline std::vector<std::string> henneberg_children(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::string> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) out.push_back(canonical_form(zero_extend(g, u, v).graph));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [x, y] = g.edge(e);
        Graph base = with_edge_removed(g, e);
        for (int z = 0; z < n; ++z) {
            if (z == x || z == y) continue;
            std::vector<Edge> es = base.edges();
            es.push_back({x, n});
            es.push_back({y, n});
            es.push_back({z, n});
            out.push_back(canonical_form(Graph(n + 1, std::move(es))));
        }
    }
    return out;
}

} // namespace detail

/// Canonical forms of all minimally rigid graphs on n vertices, sorted,
/// grown from the triangle by 0- and 1-extensions.
inline std::vector<std::string> minimally_rigid_classes(int n, int threads = 1) {
    if (n < 2 || n > kCanonicalFormLimit) throw LimitError("class generation supports 2 <= n <= 12");
    if (n == 2) return {canonical_form(Graph(2, {{0, 1}}))};
    std::vector<std::string> level{canonical_form(Graph(3, {{0, 1}, {1, 2}, {0, 2}}))};
    for (int size = 3; size < n; ++size) {
        std::set<std::string> next;
        std::mutex merge;
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            std::set<std::string> local;
            for (std::size_t i; (i = cursor.fetch_add(1)) < level.size();)
                for (auto& c : detail::henneberg_children(parse_graph6(level[i]))) local.insert(std::move(c));
            std::lock_guard lock(merge);
            next.merge(local);
        };
        {
            std::vector<std::jthread> pool;
            for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
        }
        level.assign(next.begin(), next.end());
    }
    return level;
}

/// Same classes by brute force: every (2n-3)-edge graph on n vertices that
/// passes the pebble game. Exponential; meant for n <= 6.
inline std::vector<std::string> minimally_rigid_classes_brute_force(int n) {
    if (n < 2 || n > 7) throw LimitError("brute-force class generation supports 2 <= n <= 7");
    std::vector<Edge> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.push_back({i, j});
    const int m = 2 * n - 3, total = static_cast<int>(all.size());
    std::set<std::string> seen;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    while (true) {
        PebbleGame game(n);
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = game.insert(all[pick[i]].u, all[pick[i]].v);
        if (ok) {
            std::vector<Edge> es;
            for (int i : pick) es.push_back(all[i]);
            seen.insert(canonical_form(Graph(n, std::move(es))));
        }
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return {seen.begin(), seen.end()};
}

inline CatalogEntry make_catalog_entry(const std::string& form, int threads = 1) {
    CatalogEntry e;
    e.graph6 = form;
    e.graph = parse_graph6(form);
    const Graph& g = e.graph;
    e.nnac = count_nac(g, threads);
    e.is_2tree = is_2tree(g);
    auto rec = recognize_gsc(g);
    e.is_gsc = rec.member();
    if (rec.member()) e.prisms_used = rec.decomposition->prisms;
    e.prism_subgraphs = count_prism_subgraphs(g);
    auto zero = recognize_0extension_graph(g);
    e.is_0ext_graph = zero.is_zero_extension_graph;
    e.min_open_steps = zero.min_open_steps;
    return e;
}

/// Every minimally rigid graph on n vertices up to isomorphism, sorted by
/// graph6. n = 9 takes minutes and must be requested explicitly.
inline std::vector<CatalogEntry> enumerate_minimally_rigid(int n, bool allow_large = false, int threads = 1) {
    const int limit = allow_large ? kCatalogMaxOptIn : kCatalogMaxDefault;
    if (n < 3 || n > limit)
        throw LimitError("catalog supports 3 <= n <= " + std::to_string(limit) +
                         (allow_large ? "" : " (n = 9 needs the opt-in flag)"));
    std::vector<CatalogEntry> out;
    for (const auto& form : minimally_rigid_classes(n, threads)) out.push_back(make_catalog_entry(form));
    return out;
}

struct NacHistogram {
    std::map<NacCount, int> buckets;
    NacCount max_nnac = 0;  ///< M_n
    int maximizers = 0;
    int total = 0;
};

inline NacHistogram nnac_histogram(const std::vector<CatalogEntry>& catalog) {
    NacHistogram h;
    for (const auto& e : catalog) {
        ++h.buckets[e.nnac];
        ++h.total;
    }
    if (!h.buckets.empty()) {
        h.max_nnac = h.buckets.rbegin()->first;
        h.maximizers = h.buckets.rbegin()->second;
    }
    return h;
}

/// Counterexamples to: nnac = 1 iff (G_sc with exactly one prism) or
/// (0-extension graph with exactly one open step). "One prism" is read two
/// ways, as one prism step in the decomposition and as one prism subgraph;
/// "one open step" as a minimum of one over construction orders.
struct ConjectureReport {
    int n = 0;
    int checked = 0;
    int unique_nac = 0;                         ///< entries with nnac = 1
    std::vector<std::string> violations_steps;  ///< graph6, prism-step reading
    std::vector<std::string> violations_subgraphs;

    bool holds() const noexcept { return violations_steps.empty() && violations_subgraphs.empty(); }
};

inline ConjectureReport check_unique_nac_conjecture(const std::vector<CatalogEntry>& catalog) {
    ConjectureReport r;
    for (const auto& e : catalog) {
        r.n = e.graph.vertex_count();
        ++r.checked;
        const bool unique = e.nnac == 1;
        r.unique_nac += unique;
        const bool open_clause = e.is_0ext_graph && e.min_open_steps == 1;
        const bool by_steps = (e.is_gsc && e.prisms_used == 1) || open_clause;
        const bool by_subgraphs = (e.is_gsc && e.prism_subgraphs == 1) || open_clause;
        if (by_steps != unique) r.violations_steps.push_back(e.graph6);
        if (by_subgraphs != unique) r.violations_subgraphs.push_back(e.graph6);
    }
    return r;
}

} // namespace rignac
