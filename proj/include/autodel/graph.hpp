#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace autodel {

// Relabeling produced by a surgery operation: old id -> new id,
// kNoVertex for vertices the operation removed.
struct VertexMap {
    static constexpr int kNoVertex = -1;

    std::vector<int> entries;

    int operator[](int old_id) const { return entries.at(static_cast<std::size_t>(old_id)); }
    int size() const { return static_cast<int>(entries.size()); }
};

// Finite simple undirected graph. Vertex ids are contiguous 0..n-1,
// neighbor lists are kept sorted, and a bitset row per vertex backs
// O(1) adjacency tests. Instances are treated as immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Construction-phase mutation; rejects loops and duplicate edges.
    void add_edge(int u, int v);

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::size_t words_ = 0; // bitset words per row
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

// --- surgery -------------------------------------------------------------

// Removes v; surviving vertices are compacted preserving order.
std::pair<Graph, VertexMap> delete_vertex(const Graph& g, int v);

// Removes the edge {u, v}; vertex set unchanged.
Graph delete_edge(const Graph& g, int u, int v);

// Vertices of g2 are appended after those of g1; the map covers g2.
std::pair<Graph, VertexMap> disjoint_union(const Graph& g1, const Graph& g2);

// Merges b into a (a, b non-adjacent); the merged vertex keeps min(a, b)'s
// slot and inherits the union of both neighborhoods.
std::pair<Graph, VertexMap> identify_vertices(const Graph& g, int a, int b);

// Replaces {u, v} by the path u - w - v; w is the new highest id.
std::pair<Graph, int> subdivide_edge(const Graph& g, int u, int v);

// --- serialization -------------------------------------------------------

// Canonical graph6 bytes (no optional header emitted).
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header; throws parse_error with the
// byte offset on malformed input.
Graph from_graph6(std::string_view text);

// Undirected DOT text. Vertices present in `labels` carry their name; a
// label named "target" (or "target:0"/"target:1" endpoints of a marked
// edge) is rendered with a distinct attribute.
std::string to_dot(const Graph& g, const std::map<std::string, int>& labels = {});

} // namespace autodel
