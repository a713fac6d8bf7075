#include "autodel/autgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "autodel/errors.hpp"

namespace autodel {

ColoredPartition ColoredPartition::unit(int n) {
    ColoredPartition p;
    if (n > 0) {
        p.cells.emplace_back(static_cast<std::size_t>(n));
        std::iota(p.cells[0].begin(), p.cells[0].end(), 0);
    }
    return p;
}

void ColoredPartition::validate(int n) const {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::size_t total = 0;
    for (const auto& cell : cells) {
        if (cell.empty()) throw input_error("partition has an empty cell");
        for (int v : cell) {
            if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
                throw input_error("cells do not partition the vertex set");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        total += cell.size();
    }
    if (total != static_cast<std::size_t>(n))
        throw input_error("cells do not cover the vertex set");
}

namespace {

// Invariant event tags; values are arbitrary but fixed.
constexpr std::uint64_t kTagIndividualize = 0xA5;
constexpr std::uint64_t kTagSplit = 0xC3;
constexpr std::uint64_t kTagNodeEnd = 0xE1;

enum class Cmp { Less, Equal, Greater };

struct LeafRecord {
    bool valid = false;
    int depth = 0;
    std::vector<std::uint64_t> inv;
    std::vector<std::size_t> inv_end;
    std::vector<std::uint64_t> packed; // permuted adjacency, triangle bits MSB-first
    std::vector<int> lab;              // position -> vertex
};

} // namespace

struct AutEngine::Impl {
    const Graph* g = nullptr;
    int n = 0;

    // partition state: lab holds vertices grouped into contiguous cells
    std::vector<int> lab;       // position -> vertex
    std::vector<int> pos;       // vertex -> position
    std::vector<int> cell_of;   // position -> start position of its cell
    std::vector<int> cell_len;  // valid at cell start positions
    int num_cells = 0;

    // refinement worklist of cell start positions
    std::vector<int> queue;
    std::size_t queue_head = 0;
    std::vector<char> in_queue;

    // scatter buffers
    std::vector<int> cnt;
    std::vector<int> touched;
    std::vector<int> affected;
    std::vector<char> affected_flag;
    std::vector<std::pair<int, int>> scratch; // (key, vertex)

    // current path invariant, flattened; inv_end[d] = length after depth d
    std::vector<std::uint64_t> inv;
    std::vector<std::size_t> inv_end;

    LeafRecord first, best;

    std::vector<Permutation> found;
    std::vector<int> uf; // root orbit union-find

    struct Snapshot {
        std::vector<int> lab, pos, cell_of, cell_len;
        std::vector<int> candidates; // scratch: target-cell vertices of this depth
        int num_cells = 0;
    };
    std::vector<Snapshot> snaps;
    std::vector<int> root_explored; // root children already expanded

    std::vector<std::uint64_t> leaf_packed; // scratch for leaf packing

    int uf_find(int x) {
        while (uf[static_cast<std::size_t>(x)] != x) {
            uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            x = uf[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void uf_union(int a, int b) {
        a = uf_find(a);
        b = uf_find(b);
        if (a != b) uf[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }

    void setup(const Graph& graph, const ColoredPartition& coloring) {
        g = &graph;
        n = graph.vertex_count();
        coloring.validate(n);
        snaps.resize(static_cast<std::size_t>(n) + 1); // stable across the run
        lab.resize(static_cast<std::size_t>(n));
        pos.resize(static_cast<std::size_t>(n));
        cell_of.resize(static_cast<std::size_t>(n));
        cell_len.assign(static_cast<std::size_t>(n), 0);
        queue.clear();
        queue_head = 0;
        in_queue.assign(static_cast<std::size_t>(n), 0);
        cnt.assign(static_cast<std::size_t>(n), 0);
        touched.clear();
        affected.clear();
        affected_flag.assign(static_cast<std::size_t>(n), 0);
        inv.clear();
        inv_end.clear();
        first = LeafRecord{};
        best = LeafRecord{};
        found.clear();
        uf.resize(static_cast<std::size_t>(n));
        std::iota(uf.begin(), uf.end(), 0);

        int at = 0;
        num_cells = 0;
        for (const auto& cell : coloring.cells) {
            int start = at;
            for (int v : cell) {
                lab[static_cast<std::size_t>(at)] = v;
                pos[static_cast<std::size_t>(v)] = at;
                cell_of[static_cast<std::size_t>(at)] = start;
                ++at;
            }
            cell_len[static_cast<std::size_t>(start)] = static_cast<int>(cell.size());
            ++num_cells;
        }
    }

    void push_cell(int start) {
        if (!in_queue[static_cast<std::size_t>(start)]) {
            in_queue[static_cast<std::size_t>(start)] = 1;
            queue.push_back(start);
        }
    }

    // One splitter pass: partition every affected cell by neighbor counts
    // into the splitter span, fragments ascending by count.
    void process_splitter(int s) {
        const int len = cell_len[static_cast<std::size_t>(s)];
        for (int i = s; i < s + len; ++i) {
            for (int u : g->neighbors(lab[static_cast<std::size_t>(i)])) {
                if (cnt[static_cast<std::size_t>(u)]++ == 0) touched.push_back(u);
            }
        }
        affected.clear();
        for (int u : touched) {
            int c = cell_of[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])];
            if (!affected_flag[static_cast<std::size_t>(c)] && cell_len[static_cast<std::size_t>(c)] > 1) {
                affected_flag[static_cast<std::size_t>(c)] = 1;
                affected.push_back(c);
            }
        }
        std::sort(affected.begin(), affected.end());
        for (int c : affected) {
            affected_flag[static_cast<std::size_t>(c)] = 0;
            split_cell(c, s);
        }
        for (int u : touched) cnt[static_cast<std::size_t>(u)] = 0;
        touched.clear();
    }

    void split_cell(int c, int splitter_start) {
        const int len = cell_len[static_cast<std::size_t>(c)];
        scratch.clear();
        bool uniform = true;
        int key0 = cnt[static_cast<std::size_t>(lab[static_cast<std::size_t>(c)])];
        for (int i = c; i < c + len; ++i) {
            int v = lab[static_cast<std::size_t>(i)];
            int key = cnt[static_cast<std::size_t>(v)];
            if (key != key0) uniform = false;
            scratch.emplace_back(key, v);
        }
        if (uniform) return;
        std::stable_sort(scratch.begin(), scratch.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });

        inv.push_back(kTagSplit);
        inv.push_back(static_cast<std::uint64_t>(c));
        inv.push_back(static_cast<std::uint64_t>(splitter_start));
        const std::size_t nfrag_slot = inv.size();
        inv.push_back(0);

        int frag_start = c;
        std::uint64_t nfrag = 0;
        for (int i = 0; i < len; ++i) {
            lab[static_cast<std::size_t>(c + i)] = scratch[static_cast<std::size_t>(i)].second;
            pos[static_cast<std::size_t>(scratch[static_cast<std::size_t>(i)].second)] = c + i;
        }
        int i = 0;
        while (i < len) {
            int j = i;
            while (j < len && scratch[static_cast<std::size_t>(j)].first ==
                                  scratch[static_cast<std::size_t>(i)].first)
                ++j;
            frag_start = c + i;
            cell_len[static_cast<std::size_t>(frag_start)] = j - i;
            for (int p = frag_start; p < c + j; ++p) cell_of[static_cast<std::size_t>(p)] = frag_start;
            push_cell(frag_start);
            inv.push_back(static_cast<std::uint64_t>(scratch[static_cast<std::size_t>(i)].first));
            inv.push_back(static_cast<std::uint64_t>(j - i));
            ++nfrag;
            i = j;
        }
        num_cells += static_cast<int>(nfrag) - 1;
        inv[nfrag_slot] = nfrag;
    }

    void refine() {
        while (queue_head < queue.size()) {
            int s = queue[queue_head++];
            in_queue[static_cast<std::size_t>(s)] = 0;
            process_splitter(s);
            if (num_cells == n) break; // discrete, nothing left to split
        }
        queue.resize(0);
        queue_head = 0;
        std::fill(in_queue.begin(), in_queue.end(), 0);
        // node summary: cell count plus the cell-size sequence
        inv.push_back(kTagNodeEnd);
        inv.push_back(static_cast<std::uint64_t>(num_cells));
        for (int s = 0; s < n; s += cell_len[static_cast<std::size_t>(s)])
            inv.push_back(static_cast<std::uint64_t>(cell_len[static_cast<std::size_t>(s)]));
    }

    // First smallest non-singleton cell, or -1 when discrete.
    int target_cell() const {
        int bests = -1, bestlen = 0;
        for (int s = 0; s < n; s += cell_len[static_cast<std::size_t>(s)]) {
            int len = cell_len[static_cast<std::size_t>(s)];
            if (len >= 2 && (bests < 0 || len < bestlen)) {
                bests = s;
                bestlen = len;
            }
        }
        return bests;
    }

    void save(int depth) {
        if (snaps.size() <= static_cast<std::size_t>(depth)) snaps.resize(static_cast<std::size_t>(depth) + 1);
        Snapshot& s = snaps[static_cast<std::size_t>(depth)];
        s.lab = lab;
        s.pos = pos;
        s.cell_of = cell_of;
        s.cell_len = cell_len;
        s.num_cells = num_cells;
    }

    void restore(int depth) {
        Snapshot& s = snaps[static_cast<std::size_t>(depth)];
        lab = s.lab;
        pos = s.pos;
        cell_of = s.cell_of;
        cell_len = s.cell_len;
        num_cells = s.num_cells;
    }

    void individualize(int v) {
        int p = pos[static_cast<std::size_t>(v)];
        int c = cell_of[static_cast<std::size_t>(p)];
        int len = cell_len[static_cast<std::size_t>(c)];
        int w = lab[static_cast<std::size_t>(c)];
        std::swap(lab[static_cast<std::size_t>(c)], lab[static_cast<std::size_t>(p)]);
        pos[static_cast<std::size_t>(v)] = c;
        pos[static_cast<std::size_t>(w)] = p;
        cell_len[static_cast<std::size_t>(c)] = 1;
        cell_len[static_cast<std::size_t>(c) + 1] = len - 1;
        for (int q = c + 1; q < c + len; ++q) cell_of[static_cast<std::size_t>(q)] = c + 1;
        ++num_cells;
        inv.push_back(kTagIndividualize);
        inv.push_back(static_cast<std::uint64_t>(c));
        push_cell(c);
    }

    // Compare the current segment at `depth` against a stored leaf.
    Cmp segment_cmp(const LeafRecord& leaf, int depth) const {
        if (static_cast<std::size_t>(depth) >= leaf.inv_end.size()) return Cmp::Less;
        std::size_t a_lo = inv_end[static_cast<std::size_t>(depth) - 1];
        std::size_t a_hi = inv_end[static_cast<std::size_t>(depth)];
        std::size_t b_lo = leaf.inv_end[static_cast<std::size_t>(depth) - 1];
        std::size_t b_hi = leaf.inv_end[static_cast<std::size_t>(depth)];
        std::size_t i = a_lo, j = b_lo;
        for (; i < a_hi && j < b_hi; ++i, ++j) {
            if (inv[i] != leaf.inv[j]) return inv[i] < leaf.inv[j] ? Cmp::Less : Cmp::Greater;
        }
        if (a_hi - a_lo == b_hi - b_lo) return Cmp::Equal;
        return (a_hi - a_lo) < (b_hi - b_lo) ? Cmp::Less : Cmp::Greater;
    }

    void pack_leaf(std::vector<std::uint64_t>& out) const {
        const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
        out.assign((nbits + 63) / 64, 0);
        for (int u = 0; u < n; ++u) {
            for (int w : g->neighbors(u)) {
                if (w <= u) continue;
                int i = pos[static_cast<std::size_t>(u)];
                int j = pos[static_cast<std::size_t>(w)];
                if (i > j) std::swap(i, j);
                std::size_t k = static_cast<std::size_t>(j) * (j - 1) / 2 + static_cast<std::size_t>(i);
                out[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
            }
        }
    }

    void record_leaf(LeafRecord& leaf, int depth) const {
        leaf.valid = true;
        leaf.depth = depth;
        leaf.inv.assign(inv.begin(), inv.begin() + static_cast<std::ptrdiff_t>(inv_end[static_cast<std::size_t>(depth)]));
        leaf.inv_end.assign(inv_end.begin(), inv_end.begin() + depth + 1);
        leaf.lab = lab;
    }

    void add_automorphism(const LeafRecord& leaf) {
        std::vector<int> images(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            images[static_cast<std::size_t>(v)] =
                leaf.lab[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])];
        Permutation sigma(std::move(images));
        if (sigma.is_identity()) return;
        for (const auto& g2 : found)
            if (g2 == sigma) return;
        for (int v = 0; v < n; ++v)
            if (sigma[v] != v) uf_union(v, sigma[v]);
        found.push_back(std::move(sigma));
    }

    // Returns true if `best` was replaced inside this subtree.
    bool dfs(int depth, Cmp cmp_first_state, Cmp cmp_best_state) {
        bool best_replaced = false;
        if (num_cells == n) {
            pack_leaf(leaf_packed);
            if (!first.valid) {
                record_leaf(first, depth);
                first.packed = leaf_packed;
                best = first;
                return false;
            }
            if (cmp_first_state == Cmp::Equal && depth == first.depth && leaf_packed == first.packed)
                add_automorphism(first);
            if (cmp_best_state == Cmp::Greater ||
                (cmp_best_state == Cmp::Equal && depth == best.depth && leaf_packed > best.packed)) {
                record_leaf(best, depth);
                best.packed = leaf_packed;
                return true;
            }
            if (cmp_best_state == Cmp::Equal && depth == best.depth && leaf_packed == best.packed)
                add_automorphism(best);
            return false;
        }

        const int tc = target_cell();
        const int tlen = cell_len[static_cast<std::size_t>(tc)];
        save(depth);
        {
            std::vector<int>& candidates = snaps[static_cast<std::size_t>(depth)].candidates;
            candidates.assign(lab.begin() + tc, lab.begin() + tc + tlen);
            std::sort(candidates.begin(), candidates.end());
        }
        if (depth == 0) root_explored.clear();

        const std::size_t cand_count = static_cast<std::size_t>(tlen);
        for (std::size_t ci = 0; ci < cand_count; ++ci) {
            const int v = snaps[static_cast<std::size_t>(depth)].candidates[ci];
            if (depth == 0) {
                bool skip = false;
                for (int w : root_explored)
                    if (uf_find(w) == uf_find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            individualize(v);
            refine();
            inv_end.push_back(inv.size());

            Cmp cf = cmp_first_state;
            Cmp cb = cmp_best_state;
            if (first.valid) {
                if (cf == Cmp::Equal) cf = segment_cmp(first, depth + 1);
                if (cb == Cmp::Equal) cb = segment_cmp(best, depth + 1);
                // once different from the first path, stays different
            }
            bool keep = !first.valid || cf == Cmp::Equal || cb != Cmp::Less;
            if (keep) {
                if (dfs(depth + 1, cf, cb)) {
                    best_replaced = true;
                    // the current path is now a prefix of the best path
                    cmp_best_state = Cmp::Equal;
                }
            }
            restore(depth);
            inv_end.pop_back();
            inv.resize(inv_end.back());
            if (depth == 0) root_explored.push_back(v);
        }
        return best_replaced;
    }

    AutResult run(const Graph& graph, const ColoredPartition& coloring) {
        setup(graph, coloring);
        // root refinement is seeded with every initial cell
        for (int s = 0; s < n; s += cell_len[static_cast<std::size_t>(s)]) push_cell(s);
        if (n == 0) {
            AutResult out;
            out.group = PermGroup::trivial(0);
            out.canonical_graph6 = to_graph6(Graph(0));
            return out;
        }
        refine();
        inv_end.push_back(inv.size()); // depth-0 segment
        dfs(0, Cmp::Equal, Cmp::Equal);

        AutResult out;
        out.group = PermGroup(n, found);
        out.canonical_labeling.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            out.canonical_labeling[static_cast<std::size_t>(best.lab[static_cast<std::size_t>(i)])] = i;
        out.canonical_graph6 = packed_to_graph6();
        return out;
    }

    // graph6 text straight from the best leaf's triangle bits; the packing
    // already uses graph6 bit order.
    std::string packed_to_graph6() const {
        std::string out;
        if (n <= 62) {
            out.push_back(static_cast<char>(63 + n));
        } else {
            Graph relabeled(n);
            std::vector<int> bpos(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) bpos[static_cast<std::size_t>(best.lab[static_cast<std::size_t>(i)])] = i;
            for (int u = 0; u < n; ++u)
                for (int w : g->neighbors(u))
                    if (u < w)
                        relabeled.add_edge(bpos[static_cast<std::size_t>(u)], bpos[static_cast<std::size_t>(w)]);
            return to_graph6(relabeled);
        }
        const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
        for (std::size_t t = 0; t * 6 < nbits; ++t) {
            unsigned value = 0;
            for (std::size_t b = 0; b < 6; ++b) {
                std::size_t k = t * 6 + b;
                if (k >= nbits) break;
                unsigned bit = static_cast<unsigned>(
                    (best.packed[k >> 6] >> (63 - (k & 63))) & 1u);
                value |= bit << (5 - b);
            }
            out.push_back(static_cast<char>(63 + value));
        }
        return out;
    }
};

AutEngine::AutEngine() : impl_(std::make_unique<Impl>()) {}
AutEngine::~AutEngine() = default;
AutEngine::AutEngine(AutEngine&&) noexcept = default;
AutEngine& AutEngine::operator=(AutEngine&&) noexcept = default;

AutResult AutEngine::run(const Graph& g) { return impl_->run(g, ColoredPartition::unit(g.vertex_count())); }

AutResult AutEngine::run(const Graph& g, const ColoredPartition& coloring) {
    return impl_->run(g, coloring);
}

ColoredPartition AutEngine::refine_to_equitable(const Graph& g, const ColoredPartition& p) {
    Impl& impl = *impl_;
    impl.setup(g, p);
    for (int s = 0; s < impl.n; s += impl.cell_len[static_cast<std::size_t>(s)]) impl.push_cell(s);
    if (impl.n > 0) impl.refine();
    ColoredPartition out;
    for (int s = 0; s < impl.n; s += impl.cell_len[static_cast<std::size_t>(s)]) {
        std::vector<int> cell(impl.lab.begin() + s,
                              impl.lab.begin() + s + impl.cell_len[static_cast<std::size_t>(s)]);
        std::sort(cell.begin(), cell.end());
        out.cells.push_back(std::move(cell));
    }
    return out;
}

ColoredPartition equitable_refinement(const Graph& g, const ColoredPartition& p) {
    AutEngine engine;
    return engine.refine_to_equitable(g, p);
}

PermGroup automorphisms(const Graph& g) {
    AutEngine engine;
    return engine.run(g).group;
}

PermGroup automorphisms(const Graph& g, const ColoredPartition& coloring) {
    AutEngine engine;
    return engine.run(g, coloring).group;
}

PermGroup brute_force_automorphisms(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 10) throw resource_error("brute_force_automorphisms: hard cap is 10 vertices");
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    const auto edge_list = g.edges();
    std::vector<Permutation> elements;
    do {
        bool ok = true;
        for (auto [u, v] : edge_list) {
            if (!g.has_edge(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        }
        if (ok) elements.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return PermGroup(n, std::move(elements));
}

std::string canonical_form(const Graph& g) {
    AutEngine engine;
    return engine.run(g).canonical_graph6;
}

} // namespace autodel
