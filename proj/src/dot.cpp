#include <map>
#include <sstream>
#include <string>

#include "autodel/graph.hpp"

namespace autodel {

std::string to_dot(const Graph& g, const std::map<std::string, int>& labels) {
    std::map<int, std::string> by_vertex;
    for (auto& [name, v] : labels) {
        auto& s = by_vertex[v];
        if (!s.empty()) s += ",";
        s += name;
    }
    int target_vertex = -1;
    int target_edge_u = -1, target_edge_v = -1;
    if (auto it = labels.find("target"); it != labels.end()) target_vertex = it->second;
    if (auto u = labels.find("target:0"), v = labels.find("target:1");
        u != labels.end() && v != labels.end()) {
        target_edge_u = std::min(u->second, v->second);
        target_edge_v = std::max(u->second, v->second);
    }

    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        auto it = by_vertex.find(v);
        bool is_target = v == target_vertex;
        if (it != by_vertex.end() || is_target) {
            out << " [";
            if (it != by_vertex.end()) out << "label=\"" << it->second << "\"";
            if (is_target) out << (it != by_vertex.end() ? ", " : "") << "shape=doublecircle";
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        out << "  " << u << " -- " << v;
        if (u == target_edge_u && v == target_edge_v) out << " [style=bold, color=red]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace autodel
