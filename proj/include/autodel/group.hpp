#pragma once

#include <optional>
#include <string>
#include <vector>

namespace autodel {

// Finite group as a multiplication table over element indices 0..n-1
// with the identity fixed at index 0. Construction validates the group
// axioms: the full O(n^3) associativity check runs for n <= 64, larger
// tables are spot-checked on 10 n^2 deterministic random triples.
class FiniteGroup {
public:
    static constexpr int kDefaultSymmetricCap = 5040;

    // Default-constructs the trivial group.
    FiniteGroup() : table_{{0}}, spec_("I") {}

    // table[a][b] = a*b; throws validation_error naming the failed axiom.
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string spec = "");

    static FiniteGroup trivial();
    static FiniteGroup cyclic(int k);
    static FiniteGroup dihedral(int k);
    static FiniteGroup symmetric(int k, int factorial_cap = kDefaultSymmetricCap);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const;
    int element_order(int a) const;

    // Sorted multiset of element orders; an isomorphism invariant.
    std::vector<int> element_orders() const;

    const std::vector<std::vector<int>>& table() const { return table_; }

    // Normalized group-spec string when the group was built from family
    // atoms; empty for raw tables (callers then serialize the table).
    const std::string& spec() const { return spec_; }

    bool operator==(const FiniteGroup& other) const { return table_ == other.table_; }

private:
    std::vector<std::vector<int>> table_;
    std::string spec_;
};

// Grammar: atom := "I" | "Z"int | "C"int | "D"int | "S"int | "table:"path ;
// expr := atom ("x" atom)*, left-associated direct product. A "table:"
// atom consumes the rest of the string, so it can only appear last.
FiniteGroup parse_group_spec(const std::string& text);

// Explicit isomorphism a -> b (index map) if one exists. Searches by
// mapping a greedy generating set of `a` onto order-compatible elements
// of `b` with backtracking; any returned map satisfies
// phi(xy) = phi(x)phi(y). Orders above `order_cap` raise resource_error.
std::optional<std::vector<int>> is_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                                              int order_cap = 512);

} // namespace autodel
