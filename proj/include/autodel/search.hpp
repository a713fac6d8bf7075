#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "autodel/constructions.hpp"
#include "autodel/graph.hpp"
#include "autodel/group.hpp"

namespace autodel {

// Isomorph-free exhaustive generation of simple graphs by canonical
// augmentation: a child is accepted iff the added vertex lies in the same
// Aut-orbit as the vertex designated by the canonical labeling's last
// position. Exactly one representative per isomorphism class, streamed in
// canonical-graph6 order. Levels are cached across calls.
class GraphEnumerator {
public:
    // The structural limit is 11 vertices; the default cap is softer.
    static constexpr int kHardCap = 11;

    explicit GraphEnumerator(int order_cap = 10);

    int order_cap() const { return cap_; }

    std::uint64_t count(int n, int workers = 1);
    void for_each(int n, const std::function<void(const Graph&)>& fn, int workers = 1);
    std::vector<Graph> all(int n, int workers = 1);

    // Canonically packed upper-triangle codes, sorted; code order equals
    // canonical graph6 order at fixed n.
    const std::vector<std::uint64_t>& codes(int n, int workers = 1);

    static Graph unpack_code(int n, std::uint64_t code);

private:
    void ensure_level(int n, int workers);

    int cap_;
    std::vector<std::vector<std::uint64_t>> levels_;
};

struct SearchResult {
    std::optional<Witness> found;
    int exhausted_up_to = 0;
    std::map<int, std::uint64_t> counts; // graphs examined per order
};

// Scans orders 3..max_n for the minimum-order (then lexicographically
// least canonical form) graph G with Aut(G) iso gamma1 and a vertex v,
// one representative per Aut-orbit, with Aut(G - v) iso gamma2. The
// result is deterministic and independent of the worker count.
SearchResult search_min_vertex_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2,
                                       int max_n, int workers = 1, int max_n_cap = 11);

// Edge variant, iterating one representative edge per Aut-edge-orbit.
// Scans from order 2: the edge relation has no minimum-order constraint.
SearchResult search_min_edge_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2,
                                     int max_n, int workers = 1, int max_n_cap = 11);

} // namespace autodel
