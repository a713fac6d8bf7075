#pragma once

#include <memory>
#include <string>
#include <vector>

#include "autodel/graph.hpp"
#include "autodel/permgroup.hpp"

namespace autodel {

// Ordered partition of the vertex set; cell order is significant.
struct ColoredPartition {
    std::vector<std::vector<int>> cells;

    static ColoredPartition unit(int n);

    // Throws input_error unless the cells partition 0..n-1.
    void validate(int n) const;
};

// Coarsest equitable partition refining p: every vertex in a cell has the
// same number of neighbors in every cell. Split cells replace their parent
// in place, fragments ordered by ascending neighbor-count key.
ColoredPartition equitable_refinement(const Graph& g, const ColoredPartition& p);

struct AutResult {
    PermGroup group;
    std::vector<int> canonical_labeling; // vertex -> canonical position
    std::string canonical_graph6;
};

// Individualization-refinement backtracking engine. Instances are
// single-threaded and reusable across runs; results are deterministic.
class AutEngine {
public:
    AutEngine();
    ~AutEngine();
    AutEngine(AutEngine&&) noexcept;
    AutEngine& operator=(AutEngine&&) noexcept;

    AutResult run(const Graph& g);
    AutResult run(const Graph& g, const ColoredPartition& coloring);

    // Refinement pass only, no backtracking.
    ColoredPartition refine_to_equitable(const Graph& g, const ColoredPartition& p);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Automorphism group of g, optionally restricted to color-preserving
// permutations of an ordered coloring.
PermGroup automorphisms(const Graph& g);
PermGroup automorphisms(const Graph& g, const ColoredPartition& coloring);

// Independent oracle: tests all n! permutations (n <= 10).
PermGroup brute_force_automorphisms(const Graph& g);

// Isomorphism-invariant graph6 representative.
std::string canonical_form(const Graph& g);

} // namespace autodel
