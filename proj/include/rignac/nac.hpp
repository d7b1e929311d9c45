#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rignac/colouring.hpp"
#include "rignac/error.hpp"
#include "rignac/graph.hpp"
#include "rignac/union_find.hpp"

namespace rignac {

/// nnac(G): NAC-colourings up to colour swap.
using NacCount = boost::multiprecision::cpp_int;

/// Partial red/blue colouring kept free of almost-monochromatic cycles and of
/// monochromatic spanning forests, with undo.
///
/// Colouring uv with colour c is refused when u and v already share a
/// component of the other colour, when merging their c-components swallows an
/// edge of the other colour, or when the c-components would become the
/// components of G (every later edge of the other colour would then close an
/// almost-c cycle).
class PartialNacState {
public:
    static constexpr signed char kUncoloured = -1;
    static constexpr signed char kBlue = 0;
    static constexpr signed char kRed = 1;

    explicit PartialNacState(const Graph& g)
        : g_(&g),
          uf_{RollbackUnionFind(g.vertex_count()), RollbackUnionFind(g.vertex_count())},
          colour_(g.edge_count(), kUncoloured),
          baseline_(component_count(g)) {}

    /// Colours edge e if the result stays consistent; otherwise leaves the
    /// state untouched and returns false.
    bool try_colour(int e, bool red) {
        const int c = red ? kRed : kBlue;
        const auto [u, v] = g_->edge(e);
        if (uf_[1 - c].same(u, v)) return false;
        auto& mine = uf_[c];
        const std::size_t mark = mine.checkpoint();
        if (mine.unite(u, v)) {
            if (mine.components() == baseline_) {
                mine.rollback(mark);
                return false;
            }
            for (int f : coloured_[1 - c]) {
                const auto& ef = g_->edge(f);
                if (mine.same(ef.u, ef.v)) {
                    mine.rollback(mark);
                    return false;
                }
            }
        }
        colour_[e] = static_cast<signed char>(c);
        coloured_[c].push_back(e);
        trail_.push_back({mark, e});
        return true;
    }

    /// Reverts the most recent successful try_colour.
    void undo() {
        auto [mark, e] = trail_.back();
        trail_.pop_back();
        int c = colour_[e];
        uf_[c].rollback(mark);
        coloured_[c].pop_back();
        colour_[e] = kUncoloured;
    }

    signed char colour(int e) const { return colour_.at(e); }
    int coloured_count() const noexcept { return static_cast<int>(trail_.size()); }
    int red_component_count() const noexcept { return uf_[kRed].components(); }
    int blue_component_count() const noexcept { return uf_[kBlue].components(); }
    int baseline_component_count() const noexcept { return baseline_; }

    EdgeColouring colouring() const {
        EdgeColouring c(static_cast<int>(colour_.size()));
        for (std::size_t e = 0; e < colour_.size(); ++e)
            if (colour_[e] == kRed) c.set_red(static_cast<int>(e));
        return c;
    }

private:
    struct Step {
        std::size_t mark;
        int edge;
    };

    const Graph* g_;
    RollbackUnionFind uf_[2];
    std::vector<int> coloured_[2];
    std::vector<signed char> colour_;
    std::vector<Step> trail_;
    int baseline_;
};

enum class NacEdgeOrder {
    Canonical,
    CycleClosing,  ///< prefer edges whose endpoints are already reached
};

struct NacOptions {
    bool count_only = false;  ///< do not materialize colourings
    bool first_only = false;  ///< stop at the first NAC-colouring
    int threads = 1;
    NacEdgeOrder order = NacEdgeOrder::Canonical;
};

struct NacEnumeration {
    NacCount count = 0;
    std::uint64_t nodes = 0;  ///< accepted partial colourings
    double millis = 0;
    std::optional<EdgeColouring> first;  ///< lexicographically first when single-threaded
};

using NacSink = std::function<void(const EdgeColouring&)>;

/// Edge processing order for the search; always starts with edge 0.
inline std::vector<int> nac_edge_order(const Graph& g, NacEdgeOrder order) {
    const int m = g.edge_count();
    std::vector<int> ord;
    if (order == NacEdgeOrder::Canonical || m == 0) {
        for (int e = 0; e < m; ++e) ord.push_back(e);
        return ord;
    }
    std::vector<char> used(m, 0), reached(g.vertex_count(), 0);
    auto take = [&](int e) {
        used[e] = 1;
        reached[g.edge(e).u] = reached[g.edge(e).v] = 1;
        ord.push_back(e);
    };
    take(0);
    while (static_cast<int>(ord.size()) < m) {
        int best = -1, best_score = -1;
        for (int e = 0; e < m; ++e) {
            if (used[e]) continue;
            int score = reached[g.edge(e).u] + reached[g.edge(e).v];
            if (score > best_score) best = e, best_score = score;
            if (score == 2) break;
        }
        take(best);
    }
    return ord;
}

namespace detail {

class NacSearch {
public:
    NacSearch(const Graph& g, const std::vector<int>& ord, const NacOptions& opt, const NacSink* sink,
              std::mutex* sink_mutex, std::atomic<bool>* stop)
        : g_(g), ord_(ord), opt_(opt), sink_(sink), sink_mutex_(sink_mutex), stop_(stop), state_(g) {}

    /// Replays a prefix of colours along the order; false if it is refused.
    bool replay(const std::vector<char>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i)
            if (!state_.try_colour(ord_[i], prefix[i])) return false;
        return true;
    }

    void run(int depth) {
        if (stop_->load(std::memory_order_relaxed)) return;
        if (depth == static_cast<int>(ord_.size())) {
            leaf();
            return;
        }
        for (bool red : {false, true}) {
            if (depth == 0 && red) break;  // edge ord[0] is pinned blue
            if (state_.try_colour(ord_[depth], red)) {
                ++nodes_;
                run(depth + 1);
                state_.undo();
            }
        }
    }

    PartialNacState& state() { return state_; }
    std::uint64_t found() const noexcept { return found_; }
    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::optional<EdgeColouring>& first() const noexcept { return first_; }

private:
    void leaf() {
        ++found_;
        if (opt_.count_only && !opt_.first_only) return;
        auto c = state_.colouring();
        if (opt_.first_only) {
            if (stop_->exchange(true)) {
                --found_;
                return;
            }
            first_ = c;
        }
        if (sink_ && *sink_ && !opt_.count_only) {
            std::lock_guard lock(*sink_mutex_);
            (*sink_)(c);
        }
        if (!opt_.first_only && !first_) first_ = std::move(c);
    }

    const Graph& g_;
    const std::vector<int>& ord_;
    const NacOptions& opt_;
    const NacSink* sink_;
    std::mutex* sink_mutex_;
    std::atomic<bool>* stop_;
    PartialNacState state_;
    std::uint64_t found_ = 0;
    std::uint64_t nodes_ = 0;
    std::optional<EdgeColouring> first_;
};

} // namespace detail

/// Enumerates NAC-colourings with edge ord[0] = edge 0 pinned blue, so each
/// swap class is reached exactly once and the count is nnac(G).
///
/// With one thread, colourings reach the sink in lexicographic order of the
/// bit string (blue before red). With several threads the search tree is cut
/// into prefix tasks handed to workers; the total does not depend on the
/// thread count, emission order does.
inline NacEnumeration enumerate_nac(const Graph& g, const NacSink& sink = {}, const NacOptions& opt = {}) {
    if (g.edge_count() < 1) throw PreconditionError("NAC enumeration needs at least one edge");
    const auto start = std::chrono::steady_clock::now();
    const auto ord = nac_edge_order(g, opt.order);
    std::mutex sink_mutex;
    std::atomic<bool> stop{false};
    NacEnumeration out;
    const int threads = std::max(1, opt.threads);

    if (threads == 1) {
        detail::NacSearch search(g, ord, opt, &sink, &sink_mutex, &stop);
        search.run(0);
        out.count = search.found();
        out.nodes = search.nodes();
        out.first = search.first();
    } else {
        // Breadth-first prefixes until there is enough work to share.
        std::vector<std::vector<char>> frontier{{}};
        int depth = 0;
        std::uint64_t expansion_nodes = 0;
        const std::size_t target = static_cast<std::size_t>(threads) * 4;
        while (frontier.size() < target && depth < g.edge_count()) {
            std::vector<std::vector<char>> next;
            for (const auto& prefix : frontier) {
                for (char red : {0, 1}) {
                    if (depth == 0 && red) break;
                    detail::NacSearch probe(g, ord, opt, nullptr, &sink_mutex, &stop);
                    probe.replay(prefix);
                    if (!probe.state().try_colour(ord[depth], red)) continue;
                    ++expansion_nodes;
                    auto ext = prefix;
                    ext.push_back(red);
                    next.push_back(std::move(ext));
                }
            }
            frontier = std::move(next);
            ++depth;
        }

        std::atomic<std::size_t> next_task{0};
        std::vector<std::uint64_t> found(threads, 0), nodes(threads, 0);
        std::vector<std::optional<EdgeColouring>> firsts(threads);
        auto worker = [&](int id) {
            while (!stop.load(std::memory_order_relaxed)) {
                std::size_t t = next_task.fetch_add(1);
                if (t >= frontier.size()) break;
                detail::NacSearch search(g, ord, opt, &sink, &sink_mutex, &stop);
                search.replay(frontier[t]);
                search.run(depth);
                found[id] += search.found();
                nodes[id] += search.nodes();
                if (search.first() && (!firsts[id] || *search.first() < *firsts[id])) firsts[id] = search.first();
            }
        };
        std::vector<std::jthread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i);
        pool.clear();
        out.nodes = expansion_nodes;
        for (int i = 0; i < threads; ++i) {
            out.count += found[i];
            out.nodes += nodes[i];
            if (firsts[i] && (!out.first || *firsts[i] < *out.first)) out.first = firsts[i];
        }
    }
    out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

/// All NAC-colourings with edge 0 blue, in lexicographic order.
inline std::vector<EdgeColouring> list_nac(const Graph& g) {
    std::vector<EdgeColouring> out;
    enumerate_nac(g, [&](const EdgeColouring& c) { out.push_back(c); });
    return out;
}

inline std::optional<EdgeColouring> find_nac(const Graph& g) {
    if (g.edge_count() == 0) return std::nullopt;
    NacOptions opt;
    opt.first_only = true;
    return enumerate_nac(g, {}, opt).first;
}

/// nnac(G) assembled from its blocks: ½∏(2·nnac(B) + 2) − 1. Isolated
/// vertices are ignored; needs at least one edge.
inline NacCount count_nac(const Graph& g, int threads = 1) {
    if (g.edge_count() < 1) throw PreconditionError("nnac needs at least one edge");
    VertexSet isolated(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) isolated.insert(v);
    const Graph core = isolated.empty() ? g : without_vertices(g, isolated);
    NacOptions opt;
    opt.count_only = true;
    opt.threads = threads;
    NacCount product = 1;
    for (const auto& block : blocks(core)) {
        NacCount b = 0;
        if (block.size() > 1) b = enumerate_nac(edge_subgraph(core, block).graph, {}, opt).count;
        product *= 2 * b + 2;
    }
    return product / 2 - 1;
}

/// ⌊C(2n−4, n−2) / 2⌋, an upper bound on nnac of every n-vertex graph.
inline NacCount nnac_upper_bound(int n) {
    if (n < 2) throw PreconditionError("upper bound is defined for n >= 2");
    NacCount c = 1;
    const int top = 2 * n - 4, k = n - 2;
    for (int i = 1; i <= k; ++i) c = c * (top - k + i) / i;
    return c / 2;
}

inline NacCount count_nac_complete_bipartite(int n1, int n2) {
    if (n1 < 1 || n2 < 1) throw PreconditionError("complete bipartite sides must be nonempty");
    NacCount p = 1;
    p <<= n1 + n2 - 2;
    return p - 1;
}

} // namespace rignac
