#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rignac/error.hpp"
#include "rignac/graph.hpp"

namespace rignac {

enum class GraphFormat { Auto, EdgeList, Graph6 };

/// A parsed graph together with the input label of every vertex.
struct ParsedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::string_view strip_comment(std::string_view line) {
    auto pos = line.find('#');
    return pos == std::string_view::npos ? line : line.substr(0, pos);
}

inline bool is_graph6_token(std::string_view tok) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (c < 63 || c > 126) return false;
    return true;
}

} // namespace detail

/// Decodes a graph6 string (up to 62 vertices; the optional ">>graph6<<"
/// header is accepted).
inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty string");
    for (std::size_t i = 0; i < text.size(); ++i)
        if (text[i] < 63 || text[i] > 126)
            throw ParseError("graph6: invalid character at offset " + std::to_string(i));
    if (text[0] == 126) throw ParseError("graph6: graphs with more than 62 vertices are not supported");
    const int n = text[0] - 63;
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t need = (bits + 5) / 6;
    if (text.size() - 1 != need)
        throw ParseError("graph6: expected " + std::to_string(need) + " data bytes for n=" + std::to_string(n) +
                         ", got " + std::to_string(text.size() - 1));
    std::vector<Edge> es;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) es.push_back({i, j});
        }
    for (std::size_t r = bits; r < need * 6; ++r) {
        int byte = text[1 + r / 6] - 63;
        if ((byte >> (5 - r % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return Graph(n, std::move(es));
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw LimitError("graph6 output supports at most 62 vertices");
    std::string out(1, static_cast<char>(63 + n));
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> data((bits + 5) / 6, 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (g.adjacent(i, j)) data[k / 6] |= 1 << (5 - k % 6);
    for (int d : data) out.push_back(static_cast<char>(63 + d));
    return out;
}

/// Parses "u v" lines ('#' comments, blank lines ignored). A line with a single
/// token declares a vertex without edges. Labels are compacted to 0..n-1 in
/// order of first appearance.
inline ParsedGraph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, int> id;
    std::vector<std::string> labels;
    auto vertex = [&](const std::string& tok) {
        auto [it, fresh] = id.emplace(tok, static_cast<int>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };
    std::vector<Edge> es;
    std::vector<int> line_of;
    std::size_t start = 0;
    int line_no = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        auto toks = detail::split_ws(detail::strip_comment(text.substr(start, end - start)));
        start = end + 1;
        if (toks.empty()) continue;
        if (toks.size() == 1) {
            vertex(toks[0]);
            continue;
        }
        if (toks.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v', got " +
                             std::to_string(toks.size()) + " tokens");
        if (toks[0] == toks[1]) throw ParseError("line " + std::to_string(line_no) + ": loop at '" + toks[0] + "'");
        int a = vertex(toks[0]), b = vertex(toks[1]);
        Edge e{std::min(a, b), std::max(a, b)};
        for (std::size_t i = 0; i < es.size(); ++i)
            if (es[i] == e)
                throw ParseError("line " + std::to_string(line_no) + ": duplicate edge '" + toks[0] + " " + toks[1] +
                                 "' (first seen on line " + std::to_string(line_of[i]) + ")");
        es.push_back(e);
        line_of.push_back(line_no);
    }
    return {Graph(static_cast<int>(labels.size()), std::move(es)), std::move(labels)};
}

/// Detects graph6 when the non-comment content is one token of graph6
/// characters; otherwise reads an edge list.
inline GraphFormat detect_format(std::string_view text) {
    std::vector<std::string> toks;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        for (auto& t : detail::split_ws(detail::strip_comment(text.substr(start, end - start)))) toks.push_back(t);
        start = end + 1;
        if (toks.size() > 1) return GraphFormat::EdgeList;
    }
    if (toks.size() == 1) {
        std::string_view t = toks[0];
        if (t.starts_with(">>graph6<<")) return GraphFormat::Graph6;
        if (detail::is_graph6_token(t)) return GraphFormat::Graph6;
    }
    return GraphFormat::EdgeList;
}

inline ParsedGraph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
    if (format == GraphFormat::Auto) format = detect_format(text);
    if (format == GraphFormat::Graph6) {
        auto toks = detail::split_ws(text);
        if (toks.size() != 1) throw ParseError("graph6: expected a single token");
        Graph g = parse_graph6(toks[0]);
        std::vector<std::string> labels;
        for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(std::to_string(v));
        return {std::move(g), std::move(labels)};
    }
    return parse_edge_list(text);
}

/// One "u v" line per edge in canonical order. Single-vertex declaration lines
/// are inserted wherever first-appearance order would otherwise differ from
/// vertex order, so parse_edge_list(to_edge_list(g)) == g.
inline std::string to_edge_list(const Graph& g) {
    std::string out;
    int next = 0;  // vertices 0..next-1 have appeared
    auto declare_upto = [&](int x) {
        while (next < x) out += std::to_string(next++) + "\n";
    };
    for (const auto& e : g.edges()) {
        if (e.v >= next) {
            if (e.u >= next) {
                declare_upto(e.u);
                if (e.v > e.u + 1) declare_upto(e.u + 1);
                else next = e.u + 1;
            }
            declare_upto(e.v);
            next = e.v + 1;
        }
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    }
    declare_upto(g.vertex_count());
    return out;
}

} // namespace rignac
