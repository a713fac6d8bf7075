#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>

#include "autodel/graph.hpp"
#include "autodel/group.hpp"

namespace autodel {

// Named vertices of a constructed graph: tree leaves ("u0".."un"),
// group-element vertices ("elem:i"), the two copy images in the
// two-copy construction ("copy1:elem:i"/"copy2:elem:i"), and the
// deletion target ("target", or "target:0"/"target:1" for an edge).
struct Landmarks {
    std::map<std::string, int> names;

    int at(const std::string& name) const;
    void set(const std::string& name, int vertex);
};

struct EdgeTarget {
    int u, v;
    bool operator==(const EdgeTarget&) const = default;
};

// A concrete demonstration that deleting `target` from `graph` takes the
// automorphism group from gamma1 to gamma2.
struct Witness {
    Graph graph;
    std::variant<int, EdgeTarget> target;
    FiniteGroup gamma1;
    FiniteGroup gamma2;
    Landmarks landmarks;

    bool has_vertex_target() const { return std::holds_alternative<int>(target); }
    int vertex_target() const { return std::get<int>(target); }
    EdgeTarget edge_target() const { return std::get<EdgeTarget>(target); }
};

// Rigid tree T(n): spine u0, z_1..z_n with a pendant path of length 2i+1
// ending in leaf u_i at each z_i. Landmarks "u0".."un". Requires n >= 2.
std::pair<Graph, Landmarks> rigid_tree(int n);

// Undirected unlabeled Cayley gadget graph C'(Gamma): one vertex per group
// element, and for each ordered pair (g, b), g != b, a tree gadget encoding
// the label index i of g^-1 b in the fixed element order: a copy of T(i)
// rooted at g (u0 identified) whose far leaf u_i reaches b through the
// 2-subdivided tail u_i-x1-x2-b. Aut is Gamma acting by right
// multiplication; landmarks "elem:0".."elem:n-1".
std::pair<Graph, Landmarks> cayley_gadget_graph(const FiniteGroup& gamma);

// Gamma -> Gamma: C'(Gamma) plus a dominating vertex (the target) with a
// pendant vertex. The trivial group dispatches to T(2) with target u2.
Witness reflexive_witness(const FiniteGroup& gamma);

// I -> Gamma: C'(Gamma) with a copy of T(2n) hung on every element vertex
// and one extra vertex v (the target) adjacent to leaf u_i of the i-th copy.
Witness trivial_to_gamma_witness(const FiniteGroup& gamma);

// Gamma -> I: two copies of C'(Gamma) bridged by a T(n) per element; the
// target is the first copy's identity vertex. Requires |Gamma| >= 2.
Witness gamma_to_trivial_witness(const FiniteGroup& gamma);

// Gamma1 -> Gamma2 for arbitrary groups: C'(Gamma1) joined to one rigid
// copy of the I -> Gamma2 graph per element; the target sits in the copy
// attached to the identity vertex. Trivial groups dispatch to the
// specialized constructions above.
Witness vertex_deletion_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2);

// Rigid graph whose marked edge restores Gamma2 when deleted: C'(Gamma2)
// with a T(2n) per element plus an edge between the last two leaves of the
// identity copy. Requires |Gamma2| >= 2.
Witness rigid_asymmetric_g2(const FiniteGroup& gamma2);

// Gamma1 -> Gamma2 with an edge target; same assembly as the vertex
// theorem with rigid_asymmetric_g2 as the joined block. Gamma2 must be
// non-trivial; trivial Gamma1 returns rigid_asymmetric_g2 directly.
Witness edge_deletion_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2);

// Subdivides the marked edge and uses the new vertex as the target.
Witness edge_witness_to_vertex_witness(const Witness& w);

std::string to_dot(const Witness& w);

} // namespace autodel
