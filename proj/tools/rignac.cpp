// rignac: command-line front end. Every subcommand prints JSON on stdout
// (or a bare decimal with --raw where noted); diagnostics go to stderr.
//
// Exit codes: 0 success / true, 1 clean negative answer, 2 usage error,
// 3 precondition failure or malformed input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "rignac/json.hpp"
#include "rignac/rignac.hpp"

using namespace rignac;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

struct Globals {
    std::string file;
    std::string format = "auto";
    int threads = 0;
    bool raw = false;
};

int default_threads() {
    if (const char* env = std::getenv("RIGNAC_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (...) {
        }
        std::cerr << "rignac: ignoring invalid RIGNAC_THREADS='" << env << "'\n";
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ParsedGraph read_input(const Globals& g) {
    std::string text;
    if (g.file.empty() || g.file == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(g.file);
        if (!in) throw PreconditionError("cannot open '" + g.file + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    GraphFormat f = GraphFormat::Auto;
    if (g.format == "edgelist") f = GraphFormat::EdgeList;
    else if (g.format == "graph6") f = GraphFormat::Graph6;
    return parse_graph(text, f);
}

/// Maps an input label (as written in the edge list) to its vertex id.
int vertex_id(const ParsedGraph& p, const std::string& label) {
    for (std::size_t i = 0; i < p.labels.size(); ++i)
        if (p.labels[i] == label) return static_cast<int>(i);
    throw PreconditionError("no vertex labelled '" + label + "'");
}

bool labels_are_identity(const ParsedGraph& p) {
    for (std::size_t i = 0; i < p.labels.size(); ++i)
        if (p.labels[i] != std::to_string(i)) return false;
    return true;
}

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Json with_labels(Json j, const ParsedGraph& p) {
    if (!labels_are_identity(p)) j["labels"] = p.labels;
    return j;
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Globals& gl, bool count) {
    auto p = read_input(gl);
    const Graph& g = p.graph;
    const int n = g.vertex_count();
    Json j{{"n", n}, {"m", g.edge_count()}, {"connected", is_connected(g)}};
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    j["blocks"] = isolated ? Json(nullptr) : Json(blocks(g).size());
    if (n >= 2) {
        auto r = rigidity_report(g);
        j["rank"] = r.rank;
        j["rigid"] = r.is_rigid;
        j["minimally_rigid"] = r.is_minimally_rigid;
        j["flexible"] = r.is_flexible;
        j["rigid_components"] = r.component_count();
        j["two_tree"] = is_2tree(g);
    } else {
        j["rigid"] = true;
        j["two_tree"] = false;
    }
    if (n >= 2 && n <= 64 && is_connected(g)) {
        auto rec = recognize_gsc(g);
        Json gsc{{"member", rec.member()}};
        if (rec.member()) {
            gsc["prisms"] = rec.decomposition->prisms;
            gsc["decomposition"] = to_json(*rec.decomposition);
        } else {
            gsc["reason"] = rec.rejection == GscRejection::EdgeCountMismatch ? "edge count is not 2n-3" : "has a stable cut";
        }
        j["gsc"] = gsc;
    }
    std::optional<StableCutResult> cut;
    std::string method;
    if (!is_connected(g)) {
        cut = StableCutResult{VertexSet(n), std::nullopt, std::nullopt};
        method = "disconnected";
    } else if (n >= 3 && rigidity_report(g).is_flexible) {
        cut = find_stable_cut(g);
        method = "algorithm1";
    } else if (n >= 3 && n <= kExhaustiveStableCutLimit) {
        cut = exhaustive_stable_cut(g);
        method = "exhaustive";
    }
    if (cut) {
        j["stable_cut"] = to_json(cut->cut);
        j["stable_cut_method"] = method;
    } else {
        j["stable_cut"] = nullptr;
        if (n > kExhaustiveStableCutLimit) j["stable_cut_method"] = "skipped: too large for exhaustive search";
    }
    if (count && g.edge_count() >= 1) j["nnac"] = count_nac(g, gl.threads).str();
    emit(with_labels(j, p));
    return 0;
}

int cmd_nac(const Globals& gl, const std::string& action, bool use_blocks, bool cycle_order) {
    auto p = read_input(gl);
    const Graph& g = p.graph;
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    NacOptions opt;
    opt.threads = gl.threads;
    if (cycle_order) opt.order = NacEdgeOrder::CycleClosing;
    if (action == "count") {
        if (use_blocks) {
            auto c = count_nac(g, gl.threads);
            if (gl.raw) std::cout << c << '\n';
            else emit({{"nnac", c.str()}, {"method", "blocks"}});
            return 0;
        }
        opt.count_only = true;
        auto r = enumerate_nac(g, {}, opt);
        if (gl.raw) std::cout << r.count << '\n';
        else emit(to_json(r));
        return 0;
    }
    if (action == "list") {
        auto r = enumerate_nac(g, [](const EdgeColouring& c) { emit(to_json(c)); }, opt);
        return r.count == 0 ? kExitNegative : 0;
    }
    if (action == "exists") {
        bool yes = find_nac(g).has_value();
        std::cout << (yes ? "true" : "false") << '\n';
        return yes ? 0 : kExitNegative;
    }
    // construct
    auto c = construct_nac_minimally_rigid(g);
    if (!c.has_nac()) {
        emit(with_labels({{"nac", false}, {"reason", "2-tree"}, {"peel_order", c.two_tree->order},
                          {"base", {c.two_tree->base.u, c.two_tree->base.v}}},
                         p));
        return kExitNegative;
    }
    Json j{{"nac", true}, {"method", to_string(c.method)}, {"colouring", to_json(*c.colouring)}};
    if (c.cut) j["cut"] = to_json(*c.cut);
    if (c.decomposition) j["decomposition"] = to_json(*c.decomposition);
    emit(with_labels(j, p));
    return 0;
}

int cmd_nap(const Globals& gl, const std::string& action) {
    auto p = read_input(gl);
    const Graph& g = p.graph;
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    NacOptions opt;
    opt.threads = 1;
    bool any = false;
    if (action == "exists") {
        // Every NAP-colouring is NAC, so scanning NAC-colourings is enough.
        enumerate_nac(g, [&](const EdgeColouring& c) { any = any || is_nap(g, c); }, opt);
        std::cout << (any ? "true" : "false") << '\n';
        return any ? 0 : kExitNegative;
    }
    enumerate_nac(g,
                  [&](const EdgeColouring& c) {
                      if (!is_nap(g, c)) return;
                      any = true;
                      emit(to_json(c));
                  },
                  opt);
    return any ? 0 : kExitNegative;
}

int cmd_stable_cut(const Globals& gl, const std::vector<std::string>& separate, const std::string& avoid,
                   bool exhaustive) {
    auto p = read_input(gl);
    const Graph& g = p.graph;
    std::optional<StableCutResult> r;
    if (exhaustive) {
        StableCutConstraints cons;
        if (separate.size() == 2) cons.separate = std::pair{vertex_id(p, separate[0]), vertex_id(p, separate[1])};
        if (!avoid.empty()) cons.avoid = vertex_id(p, avoid);
        r = exhaustive_stable_cut(g, cons);
    } else if (separate.size() == 2) {
        r = algorithm1_stable_cut(g, vertex_id(p, separate[0]), vertex_id(p, separate[1]));
    } else if (!avoid.empty()) {
        r = stable_cut_avoiding(g, vertex_id(p, avoid));
    } else {
        r = find_stable_cut(g);
    }
    if (!r) {
        emit(with_labels({{"cut", nullptr}}, p));
        return kExitNegative;
    }
    emit(with_labels(to_json(g, *r), p));
    return 0;
}

int cmd_rank(const Globals& gl) {
    auto p = read_input(gl);
    int r = rank(p.graph);
    if (gl.raw) std::cout << r << '\n';
    else emit({{"rank", r}, {"max", 2 * p.graph.vertex_count() - 3}});
    return 0;
}

int cmd_components(const Globals& gl) {
    auto p = read_input(gl);
    const Graph& g = p.graph;
    Json j = to_json(rigidity_report(g));
    Json cc = Json::array();
    for (const auto& c : connected_components(g)) cc.push_back(to_json(c));
    j["connected_components"] = cc;
    emit(with_labels(j, p));
    return 0;
}

Graph build_family(const std::vector<std::string>& args) {
    if (args.empty()) throw PreconditionError("construct needs a family name");
    const auto& fam = args[0];
    auto num = [&](std::size_t i) {
        if (i >= args.size()) throw PreconditionError("family '" + fam + "' needs more parameters");
        try {
            return std::stoll(args[i]);
        } catch (...) {
            throw PreconditionError("parameter '" + args[i] + "' is not an integer");
        }
    };
    auto arity = [&](std::size_t k) {
        if (args.size() != k + 1)
            throw PreconditionError("family '" + fam + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (fam == "path") return arity(1), make_path(static_cast<int>(num(1)));
    if (fam == "cycle") return arity(1), make_cycle(static_cast<int>(num(1)));
    if (fam == "complete") return arity(1), make_complete(static_cast<int>(num(1)));
    if (fam == "bipartite")
        return arity(2), make_complete_bipartite(static_cast<int>(num(1)), static_cast<int>(num(2)));
    if (fam == "2tree") return arity(2), make_2tree(static_cast<std::uint64_t>(num(1)), static_cast<int>(num(2)));
    if (fam == "gk") return arity(1), make_gk(static_cast<int>(num(1))).graph;
    if (fam == "ladder") return arity(1), make_ladder(static_cast<int>(num(1))).graph;
    if (fam == "gsc") {
        std::string script;
        for (std::size_t i = 1; i < args.size(); ++i) script += args[i] + " ";
        return make_gsc(parse_gsc_script(script));
    }
    if (fam == "glue") {
        if (args.size() < 3 || args.size() > 4) throw PreconditionError("glue takes FIXTURE K [EDGE-INDEX]");
        const auto& h = fixture(args[1]).graph;
        int e = args.size() == 4 ? static_cast<int>(num(3)) : 0;
        if (e < 0 || e >= h.edge_count()) throw PreconditionError("edge index out of range");
        return glue_along_edge(h, e, static_cast<int>(num(2)));
    }
    if (fam == "fixture") return arity(1), fixture(args[1]).graph;
    for (const auto& f : fixtures())
        if (f.name == fam) return arity(0), f.graph;
    throw PreconditionError("unknown family '" + fam +
                            "' (path, cycle, complete, bipartite, 2tree, gk, ladder, gsc, glue, fixture, or a fixture name)");
}

int cmd_construct(const std::vector<std::string>& args, bool graph6, const std::string& out) {
    Graph g = build_family(args);
    std::string text = graph6 ? to_graph6(g) + "\n" : to_edge_list(g);
    if (out.empty()) std::cout << text;
    else {
        std::ofstream f(out);
        if (!f) throw PreconditionError("cannot write '" + out + "'");
        f << text;
    }
    return 0;
}

Json histogram_json(int n, const NacHistogram& h) {
    Json buckets = Json::object();
    for (const auto& [k, v] : h.buckets) buckets[k.str()] = v;
    return {{"n", n}, {"total", h.total}, {"histogram", buckets}, {"M", h.max_nnac.str()}, {"maximizers", h.maximizers}};
}

int cmd_catalog(const Globals& gl, int n, const std::string& in, const std::string& out, bool histogram,
                bool conjecture, bool allow_large) {
    std::vector<CatalogEntry> cat;
    if (!in.empty()) {
        std::ifstream f(in);
        if (!f) throw PreconditionError("cannot open '" + in + "'");
        cat = read_catalog(f);
        if (!cat.empty()) n = cat.front().graph.vertex_count();
    } else {
        if (n == 0) throw PreconditionError("catalog needs --n or --in");
        cat = enumerate_minimally_rigid(n, allow_large, gl.threads);
    }
    if (!out.empty()) {
        std::ofstream f(out);
        if (!f) throw PreconditionError("cannot write '" + out + "'");
        write_catalog(f, n, cat);
    }
    if (histogram) emit(histogram_json(n, nnac_histogram(cat)));
    if (conjecture) {
        auto r = check_unique_nac_conjecture(cat);
        emit({{"n", n},
              {"checked", r.checked},
              {"unique_nac", r.unique_nac},
              {"counterexamples_prism_steps", r.violations_steps},
              {"counterexamples_prism_subgraphs", r.violations_subgraphs}});
        if (!r.holds()) return kExitNegative;
    }
    if (out.empty() && !histogram && !conjecture) write_catalog(std::cout, n, cat);
    return 0;
}

// ---------------------------------------------------------------------------

int cmd_selftest(const Globals& gl) {
    Json rows = Json::array();
    bool all = true;
    auto check = [&](const std::string& group, const std::string& what, const std::string& expected,
                     const std::string& got) {
        bool ok = expected == got;
        all = all && ok;
        rows.push_back({{"group", group}, {"check", what}, {"expected", expected}, {"got", got}, {"pass", ok}});
    };
    NacOptions opt;
    opt.count_only = true;
    opt.threads = gl.threads;
    auto nnac = [&](const Graph& g) { return enumerate_nac(g, {}, opt).count.str(); };

    check("small graphs", "nnac(K33)", "15", nnac(make_complete_bipartite(3, 3)));
    check("small graphs", "nnac(3-prism)", "1", nnac(fixture("prism").graph));
    for (int n = 3; n <= 12; ++n) {
        check("trees", "nnac(P" + std::to_string(n) + ")", ((NacCount(1) << (n - 2)) - 1).str(), nnac(make_path(n)));
        check("cycles", "nnac(C" + std::to_string(n) + ")", ((NacCount(1) << (n - 1)) - (n + 1)).str(),
              nnac(make_cycle(n)));
    }
    for (int a = 1; a <= 7; ++a)
        for (int b = a; a + b <= 8; ++b)
            check("complete bipartite", "nnac(K" + std::to_string(a) + "," + std::to_string(b) + ")",
                  count_nac_complete_bipartite(a, b).str(), nnac(make_complete_bipartite(a, b)));
    for (int k = 2; k <= 5; ++k)
        check("G_k family", "nnac(G_" + std::to_string(k) + ")", ((NacCount(1) << (2 * k - 2)) - 1).str(),
              nnac(make_gk(k).graph));
    for (int k = 2; k <= 3; ++k)
        check("edge gluing", "nnac(" + std::to_string(k) + " prisms glued on an edge)",
              ((NacCount(1) << k) - 1).str(), nnac(glue_along_edge(fixture("prism").graph, 0, k)));
    check("edge gluing", "nnac(2 K33 glued on an edge)", "255",
          nnac(glue_along_edge(make_complete_bipartite(3, 3), 0, 2)));
    check("18-vertex graph", "nnac(h18)", "180607", nnac(fixture("h18").graph));
    check("upper bound", "upper bound n=6", "35", nnac_upper_bound(6).str());
    auto h7 = nnac_histogram(enumerate_minimally_rigid(7));
    check("catalog", "minimally rigid classes on 7 vertices", "70", std::to_string(h7.total));
    check("catalog", "M_7 and its multiplicity", "31x1", h7.max_nnac.str() + "x" + std::to_string(h7.maximizers));
    auto h8 = nnac_histogram(enumerate_minimally_rigid(8));
    check("catalog", "M_8", "63", h8.max_nnac.str());

    emit({{"selftest", all ? "PASS" : "FAIL"}, {"checks", rows}});
    return all ? 0 : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact 2D combinatorial rigidity and NAC-colouring toolkit"};
    app.require_subcommand(1);
    Globals gl;
    gl.threads = 0;
    app.add_option("--file,-f", gl.file, "Input graph file (default: stdin)");
    app.add_option("--format", gl.format, "Input format")->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
    app.add_option("--threads,-j", gl.threads, "Worker threads (default: RIGNAC_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    app.add_flag("--raw", gl.raw, "Print counts as a bare decimal");

    auto* analyze = app.add_subcommand("analyze", "Structural and rigidity report");
    bool analyze_count = false;
    analyze->add_flag("--count", analyze_count, "Also count NAC-colourings (exponential)");

    auto* nac = app.add_subcommand("nac", "NAC-colourings");
    nac->require_subcommand(1);
    bool use_blocks = false, cycle_order = false;
    std::string nac_action;
    for (const char* name : {"count", "list", "exists", "construct"}) {
        auto* s = nac->add_subcommand(name);
        s->callback([&nac_action, name] { nac_action = name; });
        if (std::string(name) == "count") s->add_flag("--blocks", use_blocks, "Multiply over blocks");
        if (std::string(name) != "construct")
            s->add_flag("--cycle-order", cycle_order, "Process edges closing cycles early");
    }

    auto* nap = app.add_subcommand("nap", "NAP-colourings");
    nap->require_subcommand(1);
    std::string nap_action;
    for (const char* name : {"list", "exists"})
        nap->add_subcommand(name)->callback([&nap_action, name] { nap_action = name; });

    auto* sc = app.add_subcommand("stable-cut", "Find a stable cut");
    std::vector<std::string> separate;
    std::string avoid;
    bool exhaustive = false;
    sc->add_option("--separate", separate, "Two vertices to separate")->expected(2);
    sc->add_option("--avoid", avoid, "Vertex the cut must avoid");
    sc->add_flag("--exhaustive", exhaustive, "Minimum stable cut by exhaustive search (n <= 24)");

    auto* rk = app.add_subcommand("rank", "(2,3)-sparsity rank");
    auto* comps = app.add_subcommand("components", "Rigid and connected components");

    auto* cons = app.add_subcommand("construct", "Emit a named graph family");
    std::vector<std::string> family;
    bool as_graph6 = false;
    std::string cons_out;
    cons->add_option("family", family, "FAMILY [PARAMS...]")->required();
    cons->add_flag("--graph6", as_graph6, "Emit graph6 instead of an edge list");
    cons->add_option("--out,-o", cons_out, "Write to a file");

    auto* cat = app.add_subcommand("catalog", "Minimally rigid graphs up to isomorphism");
    int cat_n = 0;
    std::string cat_in, cat_out;
    bool cat_hist = false, cat_conj = false, cat_large = false;
    cat->add_option("--n", cat_n, "Vertex count (3..8; 9 with --allow-large)");
    cat->add_option("--in", cat_in, "Read a stored catalog instead of generating");
    cat->add_option("--out,-o", cat_out, "Store the catalog as JSON lines");
    cat->add_flag("--histogram", cat_hist, "Print the nnac histogram and M_n");
    cat->add_flag("--check-conjecture", cat_conj, "Search for counterexamples to the unique-NAC conjecture");
    cat->add_flag("--allow-large", cat_large, "Permit n = 9");

    auto* st = app.add_subcommand("selftest", "Check the published numbers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }
    if (gl.threads == 0) gl.threads = default_threads();

    try {
        if (*analyze) return cmd_analyze(gl, analyze_count);
        if (*nac) return cmd_nac(gl, nac_action, use_blocks, cycle_order);
        if (*nap) return cmd_nap(gl, nap_action);
        if (*sc) return cmd_stable_cut(gl, separate, avoid, exhaustive);
        if (*rk) return cmd_rank(gl);
        if (*comps) return cmd_components(gl);
        if (*cons) return cmd_construct(family, as_graph6, cons_out);
        if (*cat) return cmd_catalog(gl, cat_n, cat_in, cat_out, cat_hist, cat_conj, cat_large);
        if (*st) return cmd_selftest(gl);
    } catch (const rignac::Error& e) {
        std::cerr << "rignac: " << e.what() << '\n';
        return kExitPrecondition;
    }
    return kExitUsage;
}
