#pragma once

// DOT (Graphviz) rendering of relation graphs and Hasse diagrams.

#include <sstream>
#include <string>

#include "lieposet/poset.hpp"
#include "lieposet/relgraph.hpp"

namespace lieposet {

// Undirected graph; dashed edges carry style=dashed, self-loops render as
// loops on the vertex.
inline std::string relation_graph_dot(const RelationGraph& g, const std::string& name = "RG") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v : g.vertices()) os << "  " << v << ";\n";
    for (const auto& [p, k] : g.edges()) {
        os << "  " << p.first << " -- " << p.second;
        if (k == EdgeKind::Dashed) os << " [style=dashed]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

// Covering relations only, drawn bottom-up.
inline std::string hasse_dot(const SignedPoset& p, const std::string& name = "Hasse") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int v : p.ground()) os << "  \"" << v << "\";\n";
    for (const auto& [x, y] : p.relations())
        if (p.is_cover(x, y)) os << "  \"" << x << "\" -> \"" << y << "\";\n";
    os << "}\n";
    return os.str();
}

}  // namespace lieposet
