#include "ep/pack_cover.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

namespace ep {

namespace {

bool good(const RootedGraph& rg, const Graph& h, int ell, bool pure, Budget& budget,
          const VertexSet& within) {
    return pure ? has_pure_model(rg, h, ell, budget, within)
                : has_hzl_model(rg, h, ell, budget, within);
}

VertexSet all_vertices(const Graph& g) {
    VertexSet v(g.num_vertices());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

// Single ascending removal pass; by monotonicity the result is minimal.
VertexSet minimalize(const RootedGraph& rg, const Graph& h, int ell, bool pure, Budget& budget,
                     VertexSet w) {
    for (size_t i = 0; i < w.size();) {
        VertexSet cand = w;
        cand.erase(cand.begin() + i);
        if (!cand.empty() && good(rg, h, ell, pure, budget, cand))
            w = std::move(cand);
        else
            ++i;
    }
    return w;
}

bool is_k1(const Graph& h) { return h.num_vertices() == 1; }

// Small witness for the single-vertex pattern: a tree of BFS paths from a
// well-placed center to ell of the hit Z members inside one component.
std::optional<VertexSet> k1_witness(const RootedGraph& rg, int ell, Budget& budget,
                                    const VertexSet& allowed) {
    const Graph& g = rg.graph;
    VertexSet others = set_minus(all_vertices(g), allowed);
    for (const auto& comp : connected_components_within(g, allowed)) {
        budget.tick();
        auto hp = hit_positions(comp, rg.z);
        if (static_cast<int>(hp.size()) < ell) continue;
        VertexSet forbidden = others;
        std::vector<std::vector<int>> dist;
        for (int p : hp) dist.push_back(bfs_distances(g, set_intersect(rg.z[p], comp), forbidden));
        int best_c = -1;
        long long best_sum = -1;
        for (int c : comp) {
            std::vector<int> ds;
            for (const auto& d : dist)
                if (d[c] >= 0) ds.push_back(d[c]);
            if (static_cast<int>(ds.size()) < ell) continue;
            std::partial_sort(ds.begin(), ds.begin() + ell, ds.end());
            long long sum = std::accumulate(ds.begin(), ds.begin() + ell, 0LL);
            if (best_c < 0 || sum < best_sum) {
                best_c = c;
                best_sum = sum;
            }
        }
        if (best_c < 0) continue;
        std::vector<std::pair<int, int>> by_dist;  // (dist, index into hp)
        for (size_t i = 0; i < dist.size(); ++i)
            if (dist[i][best_c] >= 0) by_dist.push_back({dist[i][best_c], static_cast<int>(i)});
        std::sort(by_dist.begin(), by_dist.end());
        VertexSet w{best_c};
        for (int i = 0; i < ell; ++i) {
            int p = hp[by_dist[i].second];
            auto path = shortest_path_to(g, best_c, set_intersect(rg.z[p], comp), forbidden);
            w = set_union(w, sorted_unique(std::move(path)));
        }
        return w;
    }
    return std::nullopt;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::violation: return "violation";
        default: return "undecided";
    }
}

std::optional<VertexSet> minimal_good_set(const RootedGraph& rg, const Graph& h, int ell,
                                          bool pure, Budget& budget, const VertexSet& allowed) {
    VertexSet within = allowed.empty() ? all_vertices(rg.graph) : allowed;
    if (within.empty()) return std::nullopt;
    VertexSet w;
    if (is_k1(h)) {
        auto cand = k1_witness(rg, ell, budget, within);
        if (!cand) return std::nullopt;
        w = *cand;
    } else if (pure) {
        auto witness = find_pure_model(rg, h, ell, budget, within);
        if (!witness) return std::nullopt;
        w = witness->model.image_vertices();
    } else {
        auto m = find_hzl_model(rg, h, ell, budget, within);
        if (!m) return std::nullopt;
        w = m->image_vertices();
    }
    return minimalize(rg, h, ell, pure, budget, std::move(w));
}

namespace {

std::vector<uint32_t> minimal_good_masks(const RootedGraph& rg, const Graph& h, int ell, bool pure,
                                         Budget& budget) {
    int n = rg.graph.num_vertices();
    if (n > 25) throw BudgetExceeded{};

    // Lazily memoized monotone predicate over vertex-subset masks.
    std::vector<char> memo(size_t{1} << n, 0);  // 0 unknown, 1 good, 2 bad
    auto good_mask = [&](uint32_t mask) {
        if (memo[mask]) return memo[mask] == 1;
        budget.tick();
        VertexSet within;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) within.push_back(v);
        bool g = !within.empty() && good(rg, h, ell, pure, budget, within);
        memo[mask] = g ? 1 : 2;
        return g;
    };

    std::vector<uint32_t> minimal;
    uint32_t total = uint32_t{1} << n;
    for (uint32_t mask = 1; mask < total; ++mask) {
        if (!good_mask(mask)) continue;
        bool min = true;
        for (int v = 0; v < n && min; ++v)
            if (mask >> v & 1)
                if (good_mask(mask & ~(uint32_t{1} << v))) min = false;
        if (min) minimal.push_back(mask);
    }
    return minimal;
}

}  // namespace

std::vector<VertexSet> all_minimal_good_sets(const RootedGraph& rg, const Graph& h, int ell,
                                             bool pure, Budget& budget) {
    int n = rg.graph.num_vertices();
    std::vector<VertexSet> out;
    for (uint32_t mask : minimal_good_masks(rg, h, ell, pure, budget)) {
        VertexSet s;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s.push_back(v);
        out.push_back(std::move(s));
    }
    return out;
}

PackingResult packing_number(const RootedGraph& rg, const Graph& h, int ell, bool pure,
                             Budget& budget) {
    int n = rg.graph.num_vertices();
    auto minimal = minimal_good_masks(rg, h, ell, pure, budget);

    std::map<uint32_t, int> pack_memo;
    std::function<int(uint32_t)> best_pack = [&](uint32_t avail) -> int {
        auto it = pack_memo.find(avail);
        if (it != pack_memo.end()) return it->second;
        budget.tick();
        // lowest available vertex covered by some candidate inside avail
        uint32_t coverable = 0;
        for (uint32_t m : minimal)
            if ((m & ~avail) == 0) coverable |= m;
        if (!coverable) return pack_memo[avail] = 0;
        int v = std::countr_zero(coverable);
        uint32_t bit = uint32_t{1} << v;
        int best = best_pack(avail & ~bit);  // leave v unused
        for (uint32_t m : minimal)
            if ((m & bit) && (m & ~avail) == 0) best = std::max(best, 1 + best_pack(avail & ~m));
        return pack_memo[avail] = best;
    };

    PackingResult out;
    uint32_t avail = (uint32_t{1} << n) - 1;
    out.nu = best_pack(avail);

    // Reconstruct one optimal packing by replaying the recursion's choices.
    int need = out.nu;
    std::vector<uint32_t> chosen;
    while (need > 0) {
        uint32_t coverable = 0;
        for (uint32_t m : minimal)
            if ((m & ~avail) == 0) coverable |= m;
        uint32_t bit = uint32_t{1} << std::countr_zero(coverable);
        bool advanced = false;
        for (uint32_t m : minimal)
            if ((m & bit) && (m & ~avail) == 0 && 1 + best_pack(avail & ~m) == need) {
                chosen.push_back(m);
                avail &= ~m;
                --need;
                advanced = true;
                break;
            }
        if (!advanced) avail &= ~bit;  // optimum leaves this vertex unused
    }
    for (uint32_t m : chosen) {
        VertexSet within;
        for (int v = 0; v < n; ++v)
            if (m >> v & 1) within.push_back(v);
        if (pure)
            out.pure_witnesses.push_back(*find_pure_model(rg, h, ell, budget, within));
        else
            out.witnesses.push_back(*find_hzl_model(rg, h, ell, budget, within));
    }
    return out;
}

CoveringResult covering_number(const RootedGraph& rg, const Graph& h, int ell, bool pure,
                               Budget& budget, const VertexSet& universe) {
    VertexSet uni = universe.empty() ? all_vertices(rg.graph) : universe;
    std::optional<VertexSet> best;
    VertexSet cur;
    std::function<void()> rec = [&]() {
        budget.tick();
        if (best && cur.size() >= best->size()) return;
        // an empty remainder carries no model (an empty vertex set would be
        // read as "unrestricted" by the search)
        VertexSet rest = set_minus(uni, cur);
        auto w = rest.empty() ? std::optional<VertexSet>{}
                              : minimal_good_set(rg, h, ell, pure, budget, rest);
        if (!w) {
            best = cur;
            return;
        }
        for (int v : *w) {
            cur = set_union(cur, {v});
            rec();
            cur = set_minus(cur, {v});
        }
    };
    rec();
    CoveringResult out;
    out.deletion_set = *best;
    out.tau = static_cast<int>(best->size());
    // certify with a fresh search
    VertexSet survivors = set_minus(uni, out.deletion_set);
    if (!survivors.empty() && good(rg, h, ell, pure, budget, survivors))
        throw std::logic_error("covering certificate failed");
    return out;
}

bool is_irrelevant(const RootedGraph& rg, const Graph& h, int ell, int v, Budget& budget) {
    if (v < 0 || v >= rg.graph.num_vertices()) throw std::invalid_argument("vertex out of range");
    auto full = covering_number(rg, h, ell, /*pure=*/true, budget);
    auto rest = covering_number(rg, h, ell, /*pure=*/true, budget,
                                set_minus(all_vertices(rg.graph), {v}));
    return full.tau == rest.tau;
}

DualityReport check_duality(const RootedGraph& rg, const Graph& h, int ell, int k,
                            const std::function<long long(int)>& bound, bool pure,
                            Budget& budget) {
    DualityReport rep;
    rep.k = k;
    try {
        auto pack = packing_number(rg, h, ell, pure, budget);
        rep.nu = pack.nu;
        if (pack.nu >= k) {
            rep.status = Status::ok;
            rep.packing = std::move(pack.witnesses);
            rep.pure_packing = std::move(pack.pure_witnesses);
            rep.note = "packing of size >= k found";
            return rep;
        }
        auto cover = covering_number(rg, h, ell, pure, budget);
        rep.tau = cover.tau;
        if (cover.tau <= bound(k)) {
            rep.status = Status::ok;
            rep.deletion_set = cover.deletion_set;
            rep.note = "deletion set within bound";
        } else {
            rep.status = Status::violation;
            rep.deletion_set = cover.deletion_set;
            rep.note = "nu < k and tau exceeds bound(k)";
        }
    } catch (const BudgetExceeded&) {
        rep.status = Status::undecided;
        rep.note = "budget exceeded";
    }
    return rep;
}

}  // namespace ep
