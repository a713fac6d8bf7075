#include "autodel/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "autodel/errors.hpp"

namespace autodel {

namespace {

void validate_table(const std::vector<std::vector<int>>& t) {
    const int n = static_cast<int>(t.size());
    if (n == 0) throw validation_error("group table is empty");
    for (const auto& row : t) {
        if (static_cast<int>(row.size()) != n)
            throw validation_error("group table is not square");
        for (int x : row)
            if (x < 0 || x >= n) throw validation_error("group table entry out of range");
    }
    for (int x = 0; x < n; ++x) {
        if (t[0][static_cast<std::size_t>(x)] != x || t[static_cast<std::size_t>(x)][0] != x)
            throw validation_error("identity axiom failed: element 0 is not a two-sided identity");
    }
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(t[a][b])] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw validation_error("Latin square axiom failed in row " + std::to_string(a));
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) seen[static_cast<std::size_t>(t[b][a])] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw validation_error("Latin square axiom failed in column " + std::to_string(a));
    }
    auto assoc = [&t](int a, int b, int c) {
        return t[static_cast<std::size_t>(t[a][b])][static_cast<std::size_t>(c)] ==
               t[static_cast<std::size_t>(a)][static_cast<std::size_t>(t[b][c])];
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (!assoc(a, b, c))
                        throw validation_error("associativity axiom failed at (" + std::to_string(a) +
                                               "," + std::to_string(b) + "," + std::to_string(c) + ")");
    } else {
        std::mt19937 rng(0x9e3779b9u);
        std::uniform_int_distribution<int> pick(0, n - 1);
        const long long samples = 10LL * n * n;
        for (long long s = 0; s < samples; ++s) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (!assoc(a, b, c))
                throw validation_error("associativity axiom failed at (" + std::to_string(a) + "," +
                                       std::to_string(b) + "," + std::to_string(c) + ")");
        }
    }
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string spec) {
    validate_table(table);
    FiniteGroup g;
    g.table_ = std::move(table);
    g.spec_ = std::move(spec);
    return g;
}

FiniteGroup FiniteGroup::trivial() { return from_table({{0}}, "I"); }

FiniteGroup FiniteGroup::cyclic(int k) {
    if (k < 1) throw input_error("cyclic: order must be >= 1");
    std::vector<std::vector<int>> t(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) t[a][b] = (a + b) % k;
    return from_table(std::move(t), k == 1 ? "I" : "Z" + std::to_string(k));
}

FiniteGroup FiniteGroup::dihedral(int k) {
    if (k < 1) throw input_error("dihedral: parameter must be >= 1");
    // element (a, b) = r^a s^b encoded as a + k*b
    const int n = 2 * k;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a1 = 0; a1 < k; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < k; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    int a = ((b1 ? a1 - a2 : a1 + a2) % k + k) % k;
                    int b = b1 ^ b2;
                    t[a1 + k * b1][a2 + k * b2] = a + k * b;
                }
    return from_table(std::move(t), "D" + std::to_string(k));
}

FiniteGroup FiniteGroup::symmetric(int k, int factorial_cap) {
    if (k < 1) throw input_error("symmetric: parameter must be >= 1");
    long long fact = 1;
    for (int i = 2; i <= k; ++i) {
        fact *= i;
        if (fact > factorial_cap)
            throw resource_error("symmetric(" + std::to_string(k) + ") exceeds the factorial cap of " +
                                 std::to_string(factorial_cap));
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(k));
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // lexicographic order puts the identity first
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(perms.size()); ++i) index[perms[static_cast<std::size_t>(i)]] = i;
    const int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    std::vector<int> prod(static_cast<std::size_t>(k));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            for (int x = 0; x < k; ++x) prod[x] = perms[a][static_cast<std::size_t>(perms[b][x])];
            t[a][b] = index.at(prod);
        }
    return from_table(std::move(t), "S" + std::to_string(k));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order(), nb = b.order();
    const int n = na * nb;
    std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int i1 = 0; i1 < na; ++i1)
        for (int j1 = 0; j1 < nb; ++j1)
            for (int i2 = 0; i2 < na; ++i2)
                for (int j2 = 0; j2 < nb; ++j2)
                    t[i1 * nb + j1][i2 * nb + j2] = a.mul(i1, i2) * nb + b.mul(j1, j2);
    std::string spec;
    if (!a.spec().empty() && !b.spec().empty()) spec = a.spec() + "x" + b.spec();
    return from_table(std::move(t), std::move(spec));
}

int FiniteGroup::inverse(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul(a, b) == 0) return b;
    return -1; // unreachable for a valid table
}

int FiniteGroup::element_order(int a) const {
    int x = a, k = 1;
    while (x != 0) {
        x = mul(x, a);
        ++k;
    }
    return k;
}

std::vector<int> FiniteGroup::element_orders() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(order()));
    for (int a = 0; a < order(); ++a) out.push_back(element_order(a));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace autodel
