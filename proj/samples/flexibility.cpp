// Reads a graph (edge list or graph6) and says whether it is rigid, where it
// bends, and how many NAC-colourings it has.
//
//   sample_flexibility samples/prism_minus_rung.txt

#include <fstream>
#include <iostream>
#include <iterator>

#include "rignac/rignac.hpp"

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: " << argv[0] << " GRAPH-FILE\n";
        return 2;
    }
    std::ifstream in(argv[1]);
    if (!in) {
        std::cerr << "cannot open " << argv[1] << "\n";
        return 2;
    }
    std::string text(std::istreambuf_iterator<char>(in), {});

    try {
        auto parsed = rignac::parse_graph(text);
        const rignac::Graph& g = parsed.graph;
        auto label = [&](int v) { return parsed.labels[v]; };

        auto report = rignac::rigidity_report(g);
        std::cout << g.vertex_count() << " vertices, " << g.edge_count() << " edges, rank " << report.rank << "\n";
        std::cout << (report.is_minimally_rigid ? "minimally rigid" : report.is_rigid ? "rigid" : "flexible") << ", "
                  << report.component_count() << " rigid component(s)\n";

        if (report.is_flexible) {
            if (auto cut = rignac::find_stable_cut(g)) {
                std::cout << "stable cut:";
                for (int v : cut->cut.members()) std::cout << ' ' << label(v);
                std::cout << "\n";
            }
        } else if (report.is_minimally_rigid) {
            auto c = rignac::construct_nac_minimally_rigid(g);
            std::cout << (c.has_nac() ? std::string("has a NAC-colouring (") + rignac::to_string(c.method) + ")"
                                      : std::string("2-tree, no NAC-colouring"))
                      << "\n";
        }

        if (g.edge_count() > 0) {
            auto first = rignac::find_nac(g);
            std::cout << "nnac = " << rignac::count_nac(g) << "\n";
            if (first) {
                std::cout << "red edges:";
                for (int e : first->red_edges()) std::cout << ' ' << label(g.edge(e).u) << '-' << label(g.edge(e).v);
                std::cout << "\n";
            }
        }
    } catch (const rignac::Error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    }
}
