#include "autodel/permgroup.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "autodel/errors.hpp"

namespace autodel {

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     const std::vector<int>& base_hint)
    : degree_(degree) {
    for (auto& g : generators) {
        if (g.degree() != degree) throw input_error("generator degree mismatch");
        if (!g.is_identity()) gens_.push_back(g);
    }
    if (gens_.empty()) return;

    // First base point: first hint point some generator moves, otherwise
    // the smallest moved point.
    int base = -1;
    auto moved_by_some = [this](int p) {
        for (const auto& g : gens_)
            if (g[p] != p) return true;
        return false;
    };
    for (int b : base_hint)
        if (b >= 0 && b < degree && moved_by_some(b)) {
            base = b;
            break;
        }
    if (base < 0)
        for (int b = 0; b < degree; ++b)
            if (moved_by_some(b)) {
                base = b;
                break;
            }

    Level level;
    level.base = base;
    level.gens = gens_;
    levels_.push_back(std::move(level));
    rebuild_level_orbit(levels_[0]);
    complete_level(0);
}

void PermGroup::rebuild_level_orbit(Level& level) const {
    level.orbit.clear();
    level.transversal.clear();
    level.position_in_orbit.assign(static_cast<std::size_t>(degree_), -1);
    level.orbit.push_back(level.base);
    level.transversal.push_back(Permutation::identity(degree_));
    level.position_in_orbit[static_cast<std::size_t>(level.base)] = 0;
    for (std::size_t i = 0; i < level.orbit.size(); ++i) {
        int p = level.orbit[i];
        for (const auto& g : level.gens) {
            int q = g[p];
            if (level.position_in_orbit[static_cast<std::size_t>(q)] < 0) {
                level.position_in_orbit[static_cast<std::size_t>(q)] =
                    static_cast<int>(level.orbit.size());
                level.orbit.push_back(q);
                level.transversal.push_back(g.compose(level.transversal[i]));
            }
        }
    }
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const {
    for (std::size_t i = from; i < levels_.size(); ++i) {
        const Level& level = levels_[i];
        int p = g[level.base];
        if (p == level.base) continue;
        int pos = level.position_in_orbit[static_cast<std::size_t>(p)];
        if (pos < 0) return {std::move(g), i};
        g = level.transversal[static_cast<std::size_t>(pos)].inverse().compose(g);
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::complete_level(std::size_t i) {
    // Schreier generators of level i must sift to the identity through the
    // chain below; any residue becomes a new strong generator there. Only
    // index access into levels_ here: the vector grows during recursion.
    for (std::size_t oi = 0; oi < levels_[i].orbit.size(); ++oi) {
        for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
            const Permutation rep = levels_[i].transversal[oi];
            const Permutation gen = levels_[i].gens[gi];
            int image = gen[levels_[i].orbit[oi]];
            int pos = levels_[i].position_in_orbit[static_cast<std::size_t>(image)];
            Permutation schreier =
                levels_[i].transversal[static_cast<std::size_t>(pos)].inverse().compose(
                    gen.compose(rep));
            if (schreier.is_identity()) continue;
            auto [residue, stop] = sift(std::move(schreier), i + 1);
            if (residue.is_identity()) continue;
            if (stop == levels_.size()) {
                Level fresh;
                for (int x = 0; x < degree_; ++x)
                    if (residue[x] != x) {
                        fresh.base = x;
                        break;
                    }
                levels_.push_back(std::move(fresh));
            }
            levels_[stop].gens.push_back(std::move(residue));
            rebuild_level_orbit(levels_[stop]);
            complete_level(stop);
        }
    }
}

bigint PermGroup::order() const {
    bigint n = 1;
    for (const auto& level : levels_) n *= static_cast<unsigned>(level.orbit.size());
    return n;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> done(static_cast<std::size_t>(degree_), 0);
    for (int start = 0; start < degree_; ++start) {
        if (done[static_cast<std::size_t>(start)]) continue;
        std::vector<int> orbit{start};
        done[static_cast<std::size_t>(start)] = 1;
        for (std::size_t i = 0; i < orbit.size(); ++i)
            for (const auto& g : gens_) {
                int q = g[orbit[i]];
                if (!done[static_cast<std::size_t>(q)]) {
                    done[static_cast<std::size_t>(q)] = 1;
                    orbit.push_back(q);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

bool PermGroup::same_orbit(int u, int v) const {
    if (u == v) return true;
    std::vector<char> done(static_cast<std::size_t>(degree_), 0);
    std::vector<int> orbit{u};
    done[static_cast<std::size_t>(u)] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens_) {
            int q = g[orbit[i]];
            if (q == v) return true;
            if (!done[static_cast<std::size_t>(q)]) {
                done[static_cast<std::size_t>(q)] = 1;
                orbit.push_back(q);
            }
        }
    return false;
}

PermGroup PermGroup::stabilizer(int v) const {
    if (v < 0 || v >= degree_) throw input_error("stabilizer: vertex out of range");
    bool moved = false;
    for (const auto& g : gens_)
        if (g[v] != v) {
            moved = true;
            break;
        }
    if (!moved) return *this; // every generator already fixes v
    PermGroup chain(degree_, gens_, {v});
    // level 0 has base v; everything below stabilizes it
    std::vector<Permutation> stab_gens;
    if (chain.levels_.size() > 1) stab_gens = chain.levels_[1].gens;
    return PermGroup(degree_, std::move(stab_gens));
}

bool PermGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    auto [residue, stop] = sift(p, 0);
    (void)stop;
    return residue.is_identity();
}

std::vector<Permutation> PermGroup::elements(std::size_t cap) const {
    std::vector<Permutation> out{Permutation::identity(degree_)};
    std::map<std::vector<int>, int> index;
    index[out[0].images()] = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (const auto& g : gens_) {
            Permutation next = out[i].compose(g);
            if (index.emplace(next.images(), static_cast<int>(out.size())).second) {
                out.push_back(std::move(next));
                if (out.size() > cap)
                    throw resource_error("permutation group enumeration exceeds the cap of " +
                                         std::to_string(cap) + " elements");
            }
        }
    }
    return out;
}

FiniteGroup as_abstract_group(const PermGroup& pg, std::size_t order_cap) {
    std::vector<Permutation> elems{Permutation::identity(pg.degree())};
    std::map<std::vector<int>, int> index;
    index[elems[0].images()] = 0;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : pg.generators()) {
            Permutation next = elems[i].compose(g);
            if (index.emplace(next.images(), static_cast<int>(elems.size())).second) {
                elems.push_back(std::move(next));
                if (elems.size() > order_cap)
                    throw resource_error("as_abstract_group: order exceeds the cap of " +
                                         std::to_string(order_cap));
            }
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                        std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                index.at(elems[static_cast<std::size_t>(a)].compose(elems[static_cast<std::size_t>(b)]).images());
    return FiniteGroup::from_table(std::move(table));
}

} // namespace autodel
