#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "autodel/group.hpp"
#include "autodel/perm.hpp"

namespace autodel {

using bigint = boost::multiprecision::cpp_int;

// Permutation group given by generators, backed by a deterministic
// stabilizer chain (base points, transversals) built at construction.
class PermGroup {
public:
    PermGroup() = default;

    static PermGroup trivial(int degree);

    // base_hint points are preferred as the first base points; used to put
    // a vertex first when computing its stabilizer.
    explicit PermGroup(int degree, std::vector<Permutation> generators,
                       const std::vector<int>& base_hint = {});

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    bigint order() const;

    // Orbit partition: cells sorted ascending, ordered by minimum element.
    std::vector<std::vector<int>> orbits() const;

    bool same_orbit(int u, int v) const;

    // Subgroup fixing v, via a chain with v as the first base point.
    PermGroup stabilizer(int v) const;

    bool contains(const Permutation& p) const;

    // All elements in deterministic breadth-first discovery order starting
    // from the identity; throws resource_error beyond `cap` elements.
    std::vector<Permutation> elements(std::size_t cap = 1000000) const;

private:
    struct Level {
        int base = -1;
        std::vector<Permutation> gens;
        std::vector<int> orbit;                  // discovery order, orbit[0] == base
        std::vector<Permutation> transversal;    // indexed like position_in_orbit
        std::vector<int> position_in_orbit;      // point -> index into orbit, -1 outside
    };

    void rebuild_level_orbit(Level& level) const;
    void complete_level(std::size_t i);
    // Returns the identity-or-residue and the level where sifting stopped.
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

    int degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
};

// Multiplication table of the (finite) group generated, elements in
// breadth-first discovery order with the identity at index 0.
FiniteGroup as_abstract_group(const PermGroup& pg, std::size_t order_cap = 10000);

} // namespace autodel
