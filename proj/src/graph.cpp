#include "autodel/graph.hpp"

#include <algorithm>
#include <string>

#include "autodel/errors.hpp"

namespace autodel {

Graph::Graph(int n) {
    if (n < 0) throw input_error("vertex count must be non-negative");
    n_ = n;
    words_ = static_cast<std::size_t>((n + 63) / 64);
    adj_.resize(static_cast<std::size_t>(n));
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw input_error("vertex id " + std::to_string(v) + " out of range [0, " +
                          std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("loop edge at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw input_error("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[static_cast<std::size_t>(u)], v);
    insert_sorted(adj_[static_cast<std::size_t>(v)], u);
    bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::pair<Graph, VertexMap> delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count())
        throw input_error("delete_vertex: vertex " + std::to_string(v) + " out of range");
    const int n = g.vertex_count();
    VertexMap map;
    map.entries.assign(static_cast<std::size_t>(n), VertexMap::kNoVertex);
    int next = 0;
    for (int u = 0; u < n; ++u)
        if (u != v) map.entries[static_cast<std::size_t>(u)] = next++;
    Graph out(n - 1);
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        for (int w : g.neighbors(u))
            if (w != v && u < w) out.add_edge(map[u], map[w]);
    }
    return {std::move(out), std::move(map)};
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw input_error("delete_edge: edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} not present");
    Graph out(g.vertex_count());
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b : g.neighbors(a))
            if (a < b && !(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
    return out;
}

std::pair<Graph, VertexMap> disjoint_union(const Graph& g1, const Graph& g2) {
    const int shift = g1.vertex_count();
    Graph out(shift + g2.vertex_count());
    for (auto [u, v] : g1.edges()) out.add_edge(u, v);
    for (auto [u, v] : g2.edges()) out.add_edge(u + shift, v + shift);
    VertexMap map;
    map.entries.resize(static_cast<std::size_t>(g2.vertex_count()));
    for (int u = 0; u < g2.vertex_count(); ++u) map.entries[static_cast<std::size_t>(u)] = u + shift;
    return {std::move(out), std::move(map)};
}

std::pair<Graph, VertexMap> identify_vertices(const Graph& g, int a, int b) {
    const int n = g.vertex_count();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw input_error("identify_vertices: need two distinct in-range vertices");
    if (g.has_edge(a, b))
        throw input_error("identify_vertices: vertices are adjacent, merge would create a loop");
    const int keep = std::min(a, b);
    const int drop = std::max(a, b);
    VertexMap map;
    map.entries.resize(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
        if (u == drop)
            map.entries[static_cast<std::size_t>(u)] = keep;
        else
            map.entries[static_cast<std::size_t>(u)] = u < drop ? u : u - 1;
    }
    Graph out(n - 1);
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u)) {
            if (u >= w) continue;
            int mu = map[u], mw = map[w];
            if (!out.has_edge(mu, mw)) out.add_edge(mu, mw); // duplicates collapse
        }
    }
    return {std::move(out), std::move(map)};
}

std::pair<Graph, int> subdivide_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw input_error("subdivide_edge: edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} not present");
    const int w = g.vertex_count();
    Graph out(w + 1);
    for (auto [a, b] : g.edges())
        if (!(a == std::min(u, v) && b == std::max(u, v))) out.add_edge(a, b);
    out.add_edge(u, w);
    out.add_edge(w, v);
    return {std::move(out), w};
}

} // namespace autodel
