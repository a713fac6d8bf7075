#include "autodel/constructions.hpp"

#include <string>

#include "autodel/errors.hpp"

namespace autodel {

int Landmarks::at(const std::string& name) const {
    auto it = names.find(name);
    if (it == names.end()) throw input_error("unknown landmark '" + name + "'");
    return it->second;
}

void Landmarks::set(const std::string& name, int vertex) {
    if (!names.emplace(name, vertex).second)
        throw input_error("duplicate landmark '" + name + "'");
}

namespace {

int tree_size(int n) { return n * n + 3 * n + 1; }

// Builds T(n) into g reusing `u0` as the tree's u0 and numbering fresh
// vertices from `next`: spine z_1..z_n first, then the pendant paths in
// i order. When `un >= 0` that existing vertex serves as the final leaf
// u_n. Returns the leaf ids u_0..u_n.
std::vector<int> append_rigid_tree(Graph& g, int u0, int n, int& next, int un = -1) {
    std::vector<int> leaves(static_cast<std::size_t>(n) + 1);
    leaves[0] = u0;
    std::vector<int> spine(static_cast<std::size_t>(n) + 1);
    spine[0] = u0;
    for (int i = 1; i <= n; ++i) {
        spine[static_cast<std::size_t>(i)] = next++;
        g.add_edge(spine[static_cast<std::size_t>(i - 1)], spine[static_cast<std::size_t>(i)]);
    }
    for (int i = 1; i <= n; ++i) {
        int prev = spine[static_cast<std::size_t>(i)];
        for (int k = 0; k < 2 * i; ++k) {
            int x = next++;
            g.add_edge(prev, x);
            prev = x;
        }
        int leaf = (i == n && un >= 0) ? un : next++;
        g.add_edge(prev, leaf);
        leaves[static_cast<std::size_t>(i)] = leaf;
    }
    return leaves;
}

void copy_edges(Graph& g, const Graph& src, int shift) {
    for (auto [u, v] : src.edges()) g.add_edge(u + shift, v + shift);
}

// 1-based label index of the gadget on the ordered pair (a, b).
int label_index(const FiniteGroup& gamma, int a, int b) {
    return gamma.mul(gamma.inverse(a), b) + 1;
}

Witness trivial_reflexive_witness() {
    auto [tree, lm] = rigid_tree(2);
    Witness w;
    w.graph = std::move(tree);
    w.target = lm.at("u2");
    w.gamma1 = FiniteGroup::trivial();
    w.gamma2 = FiniteGroup::trivial();
    w.landmarks = std::move(lm);
    w.landmarks.set("target", w.vertex_target());
    return w;
}

} // namespace

std::pair<Graph, Landmarks> rigid_tree(int n) {
    if (n < 2) throw input_error("rigid_tree: n must be at least 2");
    Graph g(tree_size(n));
    int next = 1;
    std::vector<int> leaves = append_rigid_tree(g, 0, n, next);
    Landmarks lm;
    for (int i = 0; i <= n; ++i) lm.set("u" + std::to_string(i), leaves[static_cast<std::size_t>(i)]);
    return {std::move(g), std::move(lm)};
}

std::pair<Graph, Landmarks> cayley_gadget_graph(const FiniteGroup& gamma) {
    const int n = gamma.order();
    int total = n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            total += 2 + tree_size(label_index(gamma, a, b)) - 1;
        }
    Graph g(total);
    int next = n;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            // Directed edge (a, b) becomes the label tree T(i) rooted at the
            // source by identifying u0 with a, its far leaf u_i reaching b
            // through x1, which carries the pendant x2. The gadget stretch
            // then has two branch points of different shapes (the z1 pendant
            // near a, the x2 pendant next to b), which is what rules out the
            // stray reflections the literal pendant-at-x1 gadget admits for
            // groups of order 2.
            const int i = label_index(gamma, a, b);
            std::vector<int> leaves = append_rigid_tree(g, a, i, next);
            int x1 = next++;
            int x2 = next++;
            g.add_edge(leaves[static_cast<std::size_t>(i)], x1);
            g.add_edge(x1, b);
            g.add_edge(x1, x2);
        }
    }
    Landmarks lm;
    for (int i = 0; i < n; ++i) lm.set("elem:" + std::to_string(i), i);
    return {std::move(g), std::move(lm)};
}

Witness reflexive_witness(const FiniteGroup& gamma) {
    if (gamma.order() == 1) return trivial_reflexive_witness();
    auto [core, lm] = cayley_gadget_graph(gamma);
    const int nc = core.vertex_count();
    Graph g(nc + 2);
    copy_edges(g, core, 0);
    const int v = nc;     // dominating vertex, the target
    const int u = nc + 1; // pendant
    for (int w = 0; w < nc; ++w) g.add_edge(v, w);
    g.add_edge(v, u);
    Witness w;
    w.graph = std::move(g);
    w.target = v;
    w.gamma1 = gamma;
    w.gamma2 = gamma;
    w.landmarks = std::move(lm);
    w.landmarks.set("target", v);
    w.landmarks.set("pendant", u);
    return w;
}

Witness trivial_to_gamma_witness(const FiniteGroup& gamma) {
    if (gamma.order() == 1) return trivial_reflexive_witness();
    auto [core, lm] = cayley_gadget_graph(gamma);
    const int n = gamma.order();
    const int nc = core.vertex_count();
    const int total = nc + n * (tree_size(2 * n) - 1) + 1;
    Graph g(total);
    copy_edges(g, core, 0);
    int next = nc;
    const int v = total - 1;
    for (int k = 0; k < n; ++k) {
        std::vector<int> leaves = append_rigid_tree(g, k, 2 * n, next);
        // leaf index i = k + 1 distinguishes element k
        g.add_edge(v, leaves[static_cast<std::size_t>(k) + 1]);
    }
    Witness w;
    w.graph = std::move(g);
    w.target = v;
    w.gamma1 = FiniteGroup::trivial();
    w.gamma2 = gamma;
    w.landmarks = std::move(lm);
    w.landmarks.set("target", v);
    return w;
}

Witness gamma_to_trivial_witness(const FiniteGroup& gamma) {
    const int n = gamma.order();
    if (n < 2) throw input_error("gamma_to_trivial_witness: group must be non-trivial");
    auto [core, lm] = cayley_gadget_graph(gamma);
    const int nc = core.vertex_count();
    const int total = 2 * nc + n * (tree_size(n) - 2);
    Graph g(total);
    copy_edges(g, core, 0);
    copy_edges(g, core, nc);
    int next = 2 * nc;
    for (int k = 0; k < n; ++k) append_rigid_tree(g, k, n, next, nc + k);
    Witness w;
    w.graph = std::move(g);
    w.target = 0; // first copy's identity vertex
    w.gamma1 = gamma;
    w.gamma2 = FiniteGroup::trivial();
    for (int k = 0; k < n; ++k) {
        w.landmarks.set("copy1:elem:" + std::to_string(k), k);
        w.landmarks.set("copy2:elem:" + std::to_string(k), nc + k);
    }
    w.landmarks.set("target", 0);
    return w;
}

Witness vertex_deletion_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2) {
    const int n1 = gamma1.order();
    if (n1 == 1) return trivial_to_gamma_witness(gamma2); // covers (I, I) too
    if (gamma2.order() == 1) return gamma_to_trivial_witness(gamma1);

    auto [g1, lm1] = cayley_gadget_graph(gamma1);
    Witness inner = trivial_to_gamma_witness(gamma2);
    const Graph& g2 = inner.graph;
    const int n2v = g2.vertex_count();
    const int base = g1.vertex_count();

    Graph g(base + n1 * n2v);
    copy_edges(g, g1, 0);
    for (int i = 0; i < n1; ++i) {
        const int shift = base + i * n2v;
        copy_edges(g, g2, shift);
        for (int w = 0; w < n2v; ++w) g.add_edge(i, shift + w); // join element i to all of H_i
    }
    Witness w;
    w.graph = std::move(g);
    w.target = base + inner.vertex_target(); // v2's copy inside H_1 (joined to the identity)
    w.gamma1 = gamma1;
    w.gamma2 = gamma2;
    w.landmarks = std::move(lm1);
    w.landmarks.set("target", w.vertex_target());
    return w;
}

Witness rigid_asymmetric_g2(const FiniteGroup& gamma2) {
    const int n = gamma2.order();
    if (n < 2) throw input_error("rigid_asymmetric_g2: group must be non-trivial");
    auto [core, lm] = cayley_gadget_graph(gamma2);
    const int nc = core.vertex_count();
    Graph g(nc + n * (tree_size(2 * n) - 1));
    copy_edges(g, core, 0);
    int next = nc;
    std::vector<int> identity_leaves;
    for (int k = 0; k < n; ++k) {
        std::vector<int> leaves = append_rigid_tree(g, k, 2 * n, next);
        if (k == 0) identity_leaves = std::move(leaves);
    }
    // e joins the first and last leaves of the identity copy. The resulting
    // cycle runs along the spine past z_1..z_{2n-1}, whose pendant paths all
    // have different lengths, so the cycle admits no reflection and G stays
    // rigid. Joining the last two leaves instead leaves the cycle bare
    // except for one attachment point, which hands it a reflection.
    const int eu = identity_leaves[1];
    const int ev = identity_leaves[static_cast<std::size_t>(2 * n)];
    g.add_edge(eu, ev);
    Witness w;
    w.graph = std::move(g);
    w.target = EdgeTarget{std::min(eu, ev), std::max(eu, ev)};
    w.gamma1 = FiniteGroup::trivial();
    w.gamma2 = gamma2;
    w.landmarks = std::move(lm);
    w.landmarks.set("target:0", w.edge_target().u);
    w.landmarks.set("target:1", w.edge_target().v);
    return w;
}

Witness edge_deletion_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2) {
    if (gamma2.order() == 1)
        throw input_error(
            "edge_deletion_witness: a trivial gamma2 is unsupported, the rigid block "
            "requires a non-trivial group");
    if (gamma1.order() == 1) return rigid_asymmetric_g2(gamma2);

    auto [g1, lm1] = cayley_gadget_graph(gamma1);
    Witness inner = rigid_asymmetric_g2(gamma2);
    const Graph& g2 = inner.graph;
    const int n1 = gamma1.order();
    const int n2v = g2.vertex_count();
    const int base = g1.vertex_count();

    Graph g(base + n1 * n2v);
    copy_edges(g, g1, 0);
    for (int i = 0; i < n1; ++i) {
        const int shift = base + i * n2v;
        copy_edges(g, g2, shift);
        for (int w = 0; w < n2v; ++w) g.add_edge(i, shift + w);
    }
    EdgeTarget e = inner.edge_target();
    Witness w;
    w.graph = std::move(g);
    w.target = EdgeTarget{base + e.u, base + e.v};
    w.gamma1 = gamma1;
    w.gamma2 = gamma2;
    w.landmarks = std::move(lm1);
    w.landmarks.set("target:0", base + e.u);
    w.landmarks.set("target:1", base + e.v);
    return w;
}

Witness edge_witness_to_vertex_witness(const Witness& w) {
    if (w.has_vertex_target())
        throw input_error("edge_witness_to_vertex_witness: witness already has a vertex target");
    EdgeTarget e = w.edge_target();
    auto [g, mid] = subdivide_edge(w.graph, e.u, e.v);
    Witness out;
    out.graph = std::move(g);
    out.target = mid;
    out.gamma1 = w.gamma1;
    out.gamma2 = w.gamma2;
    for (const auto& [name, v] : w.landmarks.names)
        if (name != "target:0" && name != "target:1") out.landmarks.set(name, v);
    out.landmarks.set("target", mid);
    return out;
}

std::string to_dot(const Witness& w) { return to_dot(w.graph, w.landmarks.names); }

} // namespace autodel
