#include <algorithm>
#include <optional>
#include <vector>

#include "autodel/errors.hpp"
#include "autodel/group.hpp"

namespace autodel {

namespace {

// Subgroup closure of the given elements; returns a membership mask.
std::vector<char> closure_mask(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    std::vector<int> elems{0};
    in[0] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (int s : gens) {
            int p = g.mul(elems[i], s);
            if (!in[static_cast<std::size_t>(p)]) {
                in[static_cast<std::size_t>(p)] = 1;
                elems.push_back(p);
            }
        }
    }
    return in;
}

// Smallest-first greedy generating set; each pick at least doubles the
// generated subgroup, so the set has at most log2(n) members.
std::vector<int> greedy_generators(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<char> in = closure_mask(g, gens);
    for (int x = 1; x < g.order(); ++x) {
        if (in[static_cast<std::size_t>(x)]) continue;
        gens.push_back(x);
        in = closure_mask(g, gens);
    }
    return gens;
}

struct MapSearch {
    const FiniteGroup& a;
    const FiniteGroup& b;
    const std::vector<int>& gens;
    std::vector<int> a_orders, b_orders;
    std::vector<int> phi;     // a-index -> b-index, -1 undefined
    std::vector<int> phi_inv; // b-index -> a-index, -1 unused
    std::vector<int> dom;     // elements with phi defined, discovery order

    MapSearch(const FiniteGroup& a_, const FiniteGroup& b_, const std::vector<int>& gens_)
        : a(a_), b(b_), gens(gens_) {
        for (int x = 0; x < a.order(); ++x) a_orders.push_back(a.element_order(x));
        for (int x = 0; x < b.order(); ++x) b_orders.push_back(b.element_order(x));
        phi.assign(static_cast<std::size_t>(a.order()), -1);
        phi_inv.assign(static_cast<std::size_t>(b.order()), -1);
        phi[0] = 0;
        phi_inv[0] = 0;
        dom.push_back(0);
    }

    struct Undo {
        std::size_t dom_size;
    };

    bool define(int x, int y) {
        if (phi[static_cast<std::size_t>(x)] != -1) return phi[static_cast<std::size_t>(x)] == y;
        if (phi_inv[static_cast<std::size_t>(y)] != -1) return false;
        phi[static_cast<std::size_t>(x)] = y;
        phi_inv[static_cast<std::size_t>(y)] = x;
        dom.push_back(x);
        return true;
    }

    void rollback(const Undo& u) {
        while (dom.size() > u.dom_size) {
            int x = dom.back();
            dom.pop_back();
            phi_inv[static_cast<std::size_t>(phi[static_cast<std::size_t>(x)])] = -1;
            phi[static_cast<std::size_t>(x)] = -1;
        }
    }

    // Close the partial map under products; false on any conflict.
    bool close() {
        for (std::size_t i = 0; i < dom.size(); ++i) {
            for (std::size_t j = 0; j < dom.size(); ++j) {
                int x = dom[i], y = dom[j];
                int xy = a.mul(x, y);
                int im = b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]);
                if (!define(xy, im)) return false;
            }
        }
        return true;
    }

    bool extend(std::size_t k) {
        if (k == gens.size()) return static_cast<int>(dom.size()) == a.order();
        int g = gens[k];
        for (int h = 0; h < b.order(); ++h) {
            if (b_orders[static_cast<std::size_t>(h)] != a_orders[static_cast<std::size_t>(g)]) continue;
            Undo u{dom.size()};
            if (define(g, h) && close() && extend(k + 1)) return true;
            rollback(u);
        }
        return false;
    }
};

} // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                              int order_cap) {
    if (a.order() != b.order()) return std::nullopt;
    if (a.order() > order_cap)
        throw resource_error("is_isomorphic: order " + std::to_string(a.order()) +
                             " exceeds the cap of " + std::to_string(order_cap));
    if (a.element_orders() != b.element_orders()) return std::nullopt;

    std::vector<int> gens = greedy_generators(a);
    MapSearch search(a, b, gens);
    if (!search.extend(0)) return std::nullopt;

    // full homomorphism verification of the returned map
    const std::vector<int>& phi = search.phi;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (phi[static_cast<std::size_t>(a.mul(x, y))] !=
                b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)]))
                return std::nullopt; // unreachable if the search is correct
    return phi;
}

} // namespace autodel
