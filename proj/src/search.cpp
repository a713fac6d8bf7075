#include "autodel/search.hpp"

#include <algorithm>
#include <thread>

#include "autodel/autgroup.hpp"
#include "autodel/errors.hpp"
#include "autodel/permgroup.hpp"

namespace autodel {

namespace {

// Upper-triangle bit k (graph6 order) lives at u64 bit 63-k, so numeric
// order of codes equals lexicographic canonical-graph6 order at fixed n.
std::uint64_t code_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    std::size_t k = static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
    return std::uint64_t{1} << (63 - k);
}

std::uint64_t canonical_code(const Graph& g, const std::vector<int>& canonical_labeling) {
    std::uint64_t code = 0;
    for (auto [u, v] : g.edges())
        code |= code_bit(canonical_labeling[static_cast<std::size_t>(u)],
                         canonical_labeling[static_cast<std::size_t>(v)]);
    return code;
}

void run_chunked(std::size_t total, int workers, const std::function<void(std::size_t, std::size_t, int)>& fn) {
    if (workers <= 1 || total < 2) {
        fn(0, total, 0);
        return;
    }
    const int w = std::min(workers, static_cast<int>(total));
    std::vector<std::thread> threads;
    for (int t = 0; t < w; ++t) {
        std::size_t lo = total * static_cast<std::size_t>(t) / static_cast<std::size_t>(w);
        std::size_t hi = total * (static_cast<std::size_t>(t) + 1) / static_cast<std::size_t>(w);
        threads.emplace_back(fn, lo, hi, t);
    }
    for (auto& th : threads) th.join();
}

} // namespace

GraphEnumerator::GraphEnumerator(int order_cap) : cap_(order_cap) {
    if (order_cap < 1) throw input_error("enumeration cap must be positive");
    if (order_cap > kHardCap)
        throw resource_error("enumeration beyond " + std::to_string(kHardCap) +
                             " vertices is not supported");
    levels_.resize(static_cast<std::size_t>(order_cap) + 1);
    levels_[1] = {0}; // K1
}

Graph GraphEnumerator::unpack_code(int n, std::uint64_t code) {
    Graph g(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (code & code_bit(i, j)) g.add_edge(i, j);
    return g;
}

void GraphEnumerator::ensure_level(int n, int workers) {
    if (n < 1 || n > cap_)
        throw resource_error("enumeration order " + std::to_string(n) + " outside cap " +
                             std::to_string(cap_));
    for (int m = 2; m <= n; ++m) {
        if (!levels_[static_cast<std::size_t>(m)].empty()) continue;
        const auto& parents = levels_[static_cast<std::size_t>(m) - 1];
        const int np = m - 1; // parent order
        std::vector<std::vector<std::uint64_t>> outputs(
            static_cast<std::size_t>(std::max(workers, 1)));

        run_chunked(parents.size(), workers, [&](std::size_t lo, std::size_t hi, int tid) {
            AutEngine engine;
            std::vector<std::uint64_t>& out = outputs[static_cast<std::size_t>(tid)];
            std::vector<std::uint64_t> seen; // per-parent accepted codes
            for (std::size_t pi = lo; pi < hi; ++pi) {
                const std::uint64_t pcode = parents[pi];
                seen.clear();
                for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << np); ++subset) {
                    Graph child(m);
                    for (int j = 1; j < np; ++j)
                        for (int i = 0; i < j; ++i)
                            if (pcode & code_bit(i, j)) child.add_edge(i, j);
                    for (int i = 0; i < np; ++i)
                        if (subset & (std::uint64_t{1} << i)) child.add_edge(i, np);
                    AutResult res = engine.run(child);
                    // vertex sitting at the last canonical position
                    int designated = -1;
                    for (int v = 0; v < m; ++v)
                        if (res.canonical_labeling[static_cast<std::size_t>(v)] == m - 1) {
                            designated = v;
                            break;
                        }
                    if (!res.group.same_orbit(np, designated)) continue;
                    std::uint64_t code = canonical_code(child, res.canonical_labeling);
                    if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
                    seen.push_back(code);
                    out.push_back(code);
                }
            }
        });

        std::vector<std::uint64_t> merged;
        std::size_t total = 0;
        for (const auto& out : outputs) total += out.size();
        merged.reserve(total);
        for (auto& out : outputs) merged.insert(merged.end(), out.begin(), out.end());
        std::sort(merged.begin(), merged.end());
        levels_[static_cast<std::size_t>(m)] = std::move(merged);
    }
}

const std::vector<std::uint64_t>& GraphEnumerator::codes(int n, int workers) {
    ensure_level(n, workers);
    return levels_[static_cast<std::size_t>(n)];
}

std::uint64_t GraphEnumerator::count(int n, int workers) { return codes(n, workers).size(); }

void GraphEnumerator::for_each(int n, const std::function<void(const Graph&)>& fn, int workers) {
    for (std::uint64_t code : codes(n, workers)) fn(unpack_code(n, code));
}

std::vector<Graph> GraphEnumerator::all(int n, int workers) {
    std::vector<Graph> out;
    for_each(n, [&out](const Graph& g) { out.push_back(g); }, workers);
    return out;
}

namespace {

struct Candidate {
    std::size_t index = 0; // position within the order's code list
    int vertex = -1;       // deletion vertex, or -1
    EdgeTarget edge{-1, -1};
    bool is_edge = false;
};

// Aut-orbit representatives: minimum vertex of each orbit, ascending.
std::vector<int> vertex_orbit_reps(const PermGroup& aut) {
    std::vector<int> reps;
    for (const auto& orbit : aut.orbits()) reps.push_back(orbit.front());
    std::sort(reps.begin(), reps.end());
    return reps;
}

// One representative edge per orbit of the Aut action on edges,
// lexicographically least within each orbit, ascending.
std::vector<EdgeTarget> edge_orbit_reps(const Graph& g, const PermGroup& aut) {
    auto edge_list = g.edges();
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < edge_list.size(); ++i) index[edge_list[i]] = i;
    std::vector<std::size_t> uf(edge_list.size());
    for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (uf[x] != x) {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        return x;
    };
    for (const Permutation& p : aut.generators()) {
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            auto [u, v] = edge_list[i];
            int a = p[u], b = p[v];
            if (a > b) std::swap(a, b);
            std::size_t j = index.at({a, b});
            std::size_t ri = find(i), rj = find(j);
            if (ri != rj) uf[std::max(ri, rj)] = std::min(ri, rj);
        }
    }
    std::vector<EdgeTarget> reps;
    for (std::size_t i = 0; i < edge_list.size(); ++i)
        if (find(i) == i) reps.push_back(EdgeTarget{edge_list[i].first, edge_list[i].second});
    return reps;
}

SearchResult search_impl(const FiniteGroup& gamma1, const FiniteGroup& gamma2, int max_n,
                         int workers, int max_n_cap, bool edges) {
    if (max_n > max_n_cap)
        throw resource_error("search order cap is " + std::to_string(max_n_cap));
    if (max_n < 1) throw input_error("max_n must be positive");
    if (workers < 1) workers = 1;

    GraphEnumerator enumerator(std::min(max_n, GraphEnumerator::kHardCap));
    SearchResult result;
    const int start = edges ? 2 : 3;

    for (int n = start; n <= max_n; ++n) {
        const auto& codes = enumerator.codes(n, workers);
        result.counts[n] = codes.size();

        std::vector<std::optional<Candidate>> found_per_worker(
            static_cast<std::size_t>(std::max(workers, 1)));

        run_chunked(codes.size(), workers, [&](std::size_t lo, std::size_t hi, int tid) {
            AutEngine engine;
            for (std::size_t i = lo; i < hi && !found_per_worker[static_cast<std::size_t>(tid)]; ++i) {
                Graph g = GraphEnumerator::unpack_code(n, codes[i]);
                AutResult res = engine.run(g);
                if (res.group.order() != gamma1.order()) continue;
                FiniteGroup abstract = as_abstract_group(res.group);
                if (!is_isomorphic(abstract, gamma1)) continue;
                if (!edges) {
                    for (int v : vertex_orbit_reps(res.group)) {
                        Graph h = delete_vertex(g, v).first;
                        PermGroup after = automorphisms(h);
                        if (after.order() != gamma2.order()) continue;
                        if (!is_isomorphic(as_abstract_group(after), gamma2)) continue;
                        found_per_worker[static_cast<std::size_t>(tid)] =
                            Candidate{i, v, EdgeTarget{-1, -1}, false};
                        break;
                    }
                } else {
                    for (EdgeTarget e : edge_orbit_reps(g, res.group)) {
                        Graph h = delete_edge(g, e.u, e.v);
                        PermGroup after = automorphisms(h);
                        if (after.order() != gamma2.order()) continue;
                        if (!is_isomorphic(as_abstract_group(after), gamma2)) continue;
                        found_per_worker[static_cast<std::size_t>(tid)] =
                            Candidate{i, -1, e, true};
                        break;
                    }
                }
            }
        });

        std::optional<Candidate> best;
        for (const auto& c : found_per_worker)
            if (c && (!best || c->index < best->index)) best = c;

        if (best) {
            Witness w;
            w.graph = GraphEnumerator::unpack_code(n, codes[best->index]);
            if (best->is_edge) {
                w.target = best->edge;
                w.landmarks.set("target:0", best->edge.u);
                w.landmarks.set("target:1", best->edge.v);
            } else {
                w.target = best->vertex;
                w.landmarks.set("target", best->vertex);
            }
            w.gamma1 = gamma1;
            w.gamma2 = gamma2;
            result.found = std::move(w);
            result.exhausted_up_to = n - 1;
            return result;
        }
        result.exhausted_up_to = n;
    }
    return result;
}

} // namespace

SearchResult search_min_vertex_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2,
                                       int max_n, int workers, int max_n_cap) {
    return search_impl(gamma1, gamma2, max_n, workers, max_n_cap, false);
}

SearchResult search_min_edge_witness(const FiniteGroup& gamma1, const FiniteGroup& gamma2,
                                     int max_n, int workers, int max_n_cap) {
    return search_impl(gamma1, gamma2, max_n, workers, max_n_cap, true);
}

} // namespace autodel
