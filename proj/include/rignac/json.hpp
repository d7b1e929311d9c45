#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rignac/catalog.hpp"
#include "rignac/colouring.hpp"
#include "rignac/gsc.hpp"
#include "rignac/nac.hpp"
#include "rignac/rigidity.hpp"
#include "rignac/stable_cut.hpp"

namespace rignac {

using Json = nlohmann::ordered_json;

inline constexpr int kCatalogFormatVersion = 1;

inline Json to_json(const VertexSet& s) { return s.members(); }

inline Json to_json(const GscDecomposition& d) {
    Json steps = Json::array();
    for (const auto& s : d.steps) {
        Json glue{{"type", s.glue == GscGlue::Edge ? "edge" : "triangle"}, {"at", s.at}};
        if (s.piece == GscPiece::Prism && s.glue == GscGlue::Edge)
            glue["role"] = s.role == PrismEdgeRole::Rung ? "rung" : "triangle-edge";
        steps.push_back({{"piece", s.piece == GscPiece::Prism ? "prism" : "triangle"}, {"glue", glue}, {"new", s.added}});
    }
    return {{"base", "K2"}, {"base_edge", {d.base.u, d.base.v}}, {"steps", steps}, {"prisms", d.prisms}};
}

inline GscDecomposition gsc_decomposition_from_json(const Json& j) {
    try {
        GscDecomposition d;
        if (j.at("base") != "K2") throw ParseError("decomposition base must be \"K2\"");
        auto be = j.value("base_edge", std::vector<int>{0, 1});
        if (be.size() != 2) throw ParseError("base_edge needs two vertices");
        d.base = {be[0], be[1]};
        for (const auto& s : j.at("steps")) {
            GscStep step;
            step.piece = s.at("piece") == "prism" ? GscPiece::Prism : GscPiece::Triangle;
            const auto& glue = s.at("glue");
            step.glue = glue.at("type") == "triangle" ? GscGlue::Triangle : GscGlue::Edge;
            step.at = glue.at("at").get<std::vector<int>>();
            if (step.piece == GscPiece::Prism && step.glue == GscGlue::Edge)
                step.role = glue.value("role", "triangle-edge") == "rung" ? PrismEdgeRole::Rung : PrismEdgeRole::TriangleEdge;
            step.added = s.at("new").get<std::vector<int>>();
            d.prisms += step.piece == GscPiece::Prism;
            d.steps.push_back(std::move(step));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed decomposition: ") + e.what());
    }
}

inline Json to_json(const Graph& g, const StableCutResult& r) {
    Json j{{"cut", to_json(r.cut)}};
    j["separates"] = r.separated ? Json{r.separated->first, r.separated->second} : Json(nullptr);
    j["avoids"] = r.avoided ? Json(*r.avoided) : Json(nullptr);
    j["components_after_removal"] = components_after_removal(g, r.cut);
    return j;
}

inline Json to_json(const EdgeColouring& c) { return {{"red", c.red_edges()}, {"blue", c.blue_edges()}}; }

inline Json to_json(const NacEnumeration& e) {
    return {{"nnac", e.count.str()}, {"nodes", e.nodes}, {"millis", e.millis}};
}

inline Json to_json(const RigidityReport& r) {
    Json comps = Json::array();
    for (const auto& c : r.rigid_components) comps.push_back(to_json(c));
    return {{"rank", r.rank},
            {"rigid", r.is_rigid},
            {"minimally_rigid", r.is_minimally_rigid},
            {"flexible", r.is_flexible},
            {"rigid_components", comps}};
}

inline Json to_json(const CatalogEntry& e) {
    Json j{{"graph6", e.graph6}, {"nnac", e.nnac.str()}, {"two_tree", e.is_2tree}, {"gsc", e.is_gsc}};
    j["prisms"] = e.prisms_used ? Json(*e.prisms_used) : Json(nullptr);
    j["prism_subgraphs"] = e.prism_subgraphs;
    j["zero_extension"] = e.is_0ext_graph;
    j["min_open_steps"] = e.min_open_steps ? Json(*e.min_open_steps) : Json(nullptr);
    return j;
}

inline CatalogEntry catalog_entry_from_json(const Json& j) {
    CatalogEntry e;
    e.graph6 = j.at("graph6").get<std::string>();
    e.graph = parse_graph6(e.graph6);
    e.nnac = NacCount(j.at("nnac").get<std::string>());
    e.is_2tree = j.at("two_tree");
    e.is_gsc = j.at("gsc");
    if (!j.at("prisms").is_null()) e.prisms_used = j.at("prisms").get<int>();
    e.prism_subgraphs = j.at("prism_subgraphs");
    e.is_0ext_graph = j.at("zero_extension");
    if (!j.at("min_open_steps").is_null()) e.min_open_steps = j.at("min_open_steps").get<int>();
    return e;
}

/// Header line, then one entry per line in the given (sorted) order.
inline void write_catalog(std::ostream& out, int n, const std::vector<CatalogEntry>& catalog) {
    Json header{{"format", "rignac-catalog"}, {"version", kCatalogFormatVersion}, {"n", n}, {"count", catalog.size()}};
    out << header.dump() << '\n';
    for (const auto& e : catalog) out << to_json(e).dump() << '\n';
}

inline std::vector<CatalogEntry> read_catalog(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("catalog file is empty");
    std::vector<CatalogEntry> out;
    try {
        auto header = Json::parse(line);
        if (header.value("format", "") != "rignac-catalog") throw ParseError("not a catalog file");
        if (header.value("version", 0) != kCatalogFormatVersion)
            throw ParseError("unsupported catalog version " + header.value("version", Json()).dump());
        std::size_t expected = header.at("count");
        int lineno = 1;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                out.push_back(catalog_entry_from_json(Json::parse(line)));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (out.size() != expected)
            throw ParseError("catalog header promises " + std::to_string(expected) + " entries, found " +
                             std::to_string(out.size()));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("catalog header: ") + e.what());
    }
    return out;
}

} // namespace rignac
