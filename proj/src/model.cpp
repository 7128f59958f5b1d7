#include "ep/model.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

namespace ep {

VertexSet ModelFunction::image_vertices() const {
    VertexSet out;
    for (const auto& [v, bs] : branch_sets) out.insert(out.end(), bs.begin(), bs.end());
    return sorted_unique(std::move(out));
}

ModelCheck validate_model_function(const Graph& g, const Graph& h, const ModelFunction& eta) {
    ModelCheck r;
    for (int v = 0; v < h.num_vertices(); ++v) {
        auto it = eta.branch_sets.find(v);
        if (it == eta.branch_sets.end() || it->second.empty()) {
            r.violations.push_back("branch set empty or missing for pattern vertex " + std::to_string(v));
            return r;
        }
        for (int x : it->second)
            if (x < 0 || x >= g.num_vertices()) {
                r.violations.push_back("branch set vertex outside host");
                return r;
            }
        if (!is_connected_subset(g, it->second)) {
            r.violations.push_back("branch set for pattern vertex " + std::to_string(v) +
                                   " not connected");
            return r;
        }
    }
    std::vector<char> used(g.num_vertices(), 0);
    for (const auto& [v, bs] : eta.branch_sets)
        for (int x : bs) {
            if (used[x]) {
                r.violations.push_back("branch sets not disjoint");
                return r;
            }
            used[x] = 1;
        }
    std::vector<Edge> seen;
    const auto& hedges = h.edges();
    for (size_t i = 0; i < hedges.size(); ++i) {
        auto it = eta.branch_edges.find(static_cast<int>(i));
        if (it == eta.branch_edges.end()) {
            r.violations.push_back("missing branch edge for pattern edge " + std::to_string(i));
            return r;
        }
        auto [gu, gv] = it->second;
        if (!g.has_edge(gu, gv)) {
            r.violations.push_back("branch edge is not an edge of host");
            return r;
        }
        auto [hu, hv] = hedges[i];
        const auto& bu = eta.branch_sets.at(hu);
        const auto& bv = eta.branch_sets.at(hv);
        bool fwd = set_contains(bu, gu) && set_contains(bv, gv);
        bool bwd = set_contains(bu, gv) && set_contains(bv, gu);
        if (!fwd && !bwd) {
            r.violations.push_back("branch edge ends do not match pattern edge " + std::to_string(i));
            return r;
        }
        seen.push_back(make_edge(gu, gv));
    }
    auto dedup = sorted_unique_edges(seen);
    if (dedup.size() != seen.size()) {
        r.violations.push_back("branch edges not distinct");
        return r;
    }
    r.ok = true;
    return r;
}

namespace {

// Connected components of H together with the induced sub-pattern for a
// subset of them.
std::vector<VertexSet> pattern_components(const Graph& h) { return connected_components(h); }

// All connected subsets of G restricted to `allowed`, ordered by size then
// lexicographically. Every enumerated subset costs one budget tick.
std::vector<VertexSet> connected_subsets(const Graph& g, const std::vector<char>& allowed,
                                         Budget& budget) {
    std::vector<VertexSet> out;
    int n = g.num_vertices();
    // Anchored enumeration: subsets whose minimum vertex is `anchor`.
    for (int anchor = 0; anchor < n; ++anchor) {
        if (!allowed[anchor]) continue;
        VertexSet cur{anchor};
        std::vector<char> in(n, 0), banned(n, 0);
        in[anchor] = 1;
        std::function<void()> grow = [&]() {
            budget.tick();
            out.push_back(cur);
            std::sort(out.back().begin(), out.back().end());
            // frontier: allowed neighbors of cur, above anchor, not banned
            VertexSet frontier;
            for (int v : cur)
                for (int w : g.neighbors(v))
                    if (w > anchor && allowed[w] && !in[w] && !banned[w]) frontier.push_back(w);
            frontier = sorted_unique(std::move(frontier));
            std::vector<int> taken;
            for (int w : frontier) {
                in[w] = 1;
                cur.push_back(w);
                grow();
                cur.pop_back();
                in[w] = 0;
                banned[w] = 1;
                taken.push_back(w);
            }
            for (int w : taken) banned[w] = 0;
        };
        grow();
    }
    std::stable_sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool edge_between(const Graph& g, const VertexSet& a, const VertexSet& b, Edge* found) {
    for (int u : a)
        for (int w : g.neighbors(u))
            if (set_contains(b, w)) {
                if (found) *found = make_edge(u, w);
                return true;
            }
    return false;
}

// Exhaustive enumeration of models of `pattern` inside G restricted to
// `allowed`. Calls accept on every complete assignment; stops when it
// returns true.
bool search_models(const Graph& g, const Graph& pattern, std::vector<char> allowed, Budget& budget,
                   const std::function<bool(const ModelFunction&)>& accept) {
    int hn = pattern.num_vertices();
    if (hn == 0) return false;
    ModelFunction eta;
    std::function<bool(int)> assign = [&](int hv) -> bool {
        if (hv == hn) {
            ModelFunction complete = eta;
            for (size_t i = 0; i < pattern.edges().size(); ++i) {
                auto [hu, hw] = pattern.edges()[i];
                Edge e;
                edge_between(g, complete.branch_sets.at(hu), complete.branch_sets.at(hw), &e);
                complete.branch_edges[static_cast<int>(i)] = e;
            }
            return accept(complete);
        }
        auto candidates = connected_subsets(g, allowed, budget);
        for (const auto& s : candidates) {
            budget.tick();
            bool ok = true;
            for (int hu : pattern.neighbors(hv)) {
                if (hu >= hv) continue;  // not assigned yet
                if (!edge_between(g, s, eta.branch_sets.at(hu), nullptr)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            for (int x : s) allowed[x] = 0;
            eta.branch_sets[hv] = s;
            if (assign(hv + 1)) return true;
            eta.branch_sets.erase(hv);
            for (int x : s) allowed[x] = 1;
        }
        return false;
    };
    return assign(0);
}

std::vector<char> allowed_mask(const Graph& g, const VertexSet& within) {
    if (within.empty()) return std::vector<char>(g.num_vertices(), 1);
    std::vector<char> m(g.num_vertices(), 0);
    for (int v : within) m[v] = 1;
    return m;
}

// Fast path for edgeless patterns (K1, 2K1, ...): branch sets can be whole
// components or spanning-tree splits, so only component selection matters.
std::optional<ModelFunction> find_edgeless_model(const RootedGraph& rg, int parts, int ell,
                                                 Budget& budget, const std::vector<char>& allowed) {
    VertexSet avail;
    for (int v = 0; v < rg.graph.num_vertices(); ++v)
        if (allowed[v]) avail.push_back(v);
    auto comps = connected_components_within(rg.graph, avail);
    int c = static_cast<int>(comps.size());

    // Split one component's vertex set into `cnt` connected pieces by peeling
    // leaves of a BFS tree.
    auto split_component = [&](const VertexSet& comp, int cnt) {
        std::vector<VertexSet> pieces;
        VertexSet rest = comp;
        for (int i = 0; i < cnt - 1; ++i) {
            // peel one vertex whose removal keeps the rest connected
            for (int v : rest) {
                VertexSet cand = set_minus(rest, {v});
                if (cand.empty() || is_connected_subset(rg.graph, cand)) {
                    pieces.push_back({v});
                    rest = cand;
                    break;
                }
            }
        }
        pieces.push_back(rest);
        return pieces;
    };

    auto build = [&](const std::vector<int>& chosen) -> std::optional<ModelFunction> {
        VertexSet image;
        int total = 0;
        for (int i : chosen) {
            image = set_union(image, comps[i]);
            total += static_cast<int>(comps[i].size());
        }
        if (total < parts) return std::nullopt;
        if (hits_count(image, rg.z) < ell) return std::nullopt;
        // distribute `parts` branch sets over chosen components
        std::vector<int> cnt(chosen.size(), 1);
        int extra = parts - static_cast<int>(chosen.size());
        for (size_t i = 0; i < chosen.size() && extra > 0; ++i) {
            int room = static_cast<int>(comps[chosen[i]].size()) - 1;
            int take = std::min(room, extra);
            cnt[i] += take;
            extra -= take;
        }
        if (extra > 0) return std::nullopt;
        ModelFunction eta;
        int next = 0;
        for (size_t i = 0; i < chosen.size(); ++i)
            for (auto& piece : split_component(comps[chosen[i]], cnt[i])) eta.branch_sets[next++] = piece;
        return eta;
    };

    // Enumerate component subsets of size <= parts (smallest count first so
    // full coverage of few components is preferred).
    std::vector<int> idx(c);
    std::iota(idx.begin(), idx.end(), 0);
    std::optional<ModelFunction> result;
    for (int take = std::min(parts, c); take >= 1 && !result; --take) {
        std::vector<int> sel;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<int>(sel.size()) == take) {
                budget.tick();
                if (auto m = build(sel)) {
                    result = std::move(m);
                    return true;
                }
                return false;
            }
            for (int i = start; i < c; ++i) {
                sel.push_back(i);
                if (rec(i + 1)) return true;
                sel.pop_back();
            }
            return false;
        };
        if (take == std::min(parts, c)) {
            // try the full-coverage selection of all components first when it fits
        }
        rec(0);
        if (result) break;
    }
    return result;
}

}  // namespace

std::optional<ModelFunction> find_hzl_model(const RootedGraph& rg, const Graph& h, int ell,
                                            Budget& budget, const VertexSet& within) {
    if (h.num_vertices() == 0) throw std::invalid_argument("pattern must be non-empty");
    if (ell > multiset_size(rg.z)) return std::nullopt;
    auto allowed = allowed_mask(rg.graph, within);

    if (h.num_edges() == 0)
        return find_edgeless_model(rg, h.num_vertices(), ell, budget, allowed);

    std::optional<ModelFunction> result;
    search_models(rg.graph, h, allowed, budget, [&](const ModelFunction& eta) {
        if (hits_count(eta.image_vertices(), rg.z) >= ell) {
            result = eta;
            return true;
        }
        return false;
    });
    return result;
}

std::optional<ModelFunction> find_hzl_model(const RootedGraph& rg, const Graph& h, int ell) {
    Budget b;
    return find_hzl_model(rg, h, ell, b);
}

bool has_hzl_model(const RootedGraph& rg, const Graph& h, int ell, Budget& budget,
                   const VertexSet& within) {
    return find_hzl_model(rg, h, ell, budget, within).has_value();
}

namespace {

// Given per-component hit positions, find an assignment alpha: each component
// gets a nonempty set of distinct positions, total exactly ell. Feasible iff a
// component-saturating matching exists and at least ell distinct positions are
// hit overall.
std::optional<std::map<int, std::vector<int>>> assign_alpha(
    const std::vector<std::vector<int>>& comp_hits, int ell) {
    int t = static_cast<int>(comp_hits.size());
    if (t > ell) return std::nullopt;
    std::vector<int> all;
    for (const auto& hs : comp_hits) all.insert(all.end(), hs.begin(), hs.end());
    all = sorted_unique(std::move(all));
    if (static_cast<int>(all.size()) < ell) return std::nullopt;

    // matching: component -> position (augmenting paths)
    std::map<int, int> pos_owner;  // position -> component
    std::function<bool(int, std::vector<char>&)> augment = [&](int c, std::vector<char>& seen) {
        for (int p : comp_hits[c]) {
            size_t pi = std::lower_bound(all.begin(), all.end(), p) - all.begin();
            if (seen[pi]) continue;
            seen[pi] = 1;
            auto it = pos_owner.find(p);
            if (it == pos_owner.end() || augment(it->second, seen)) {
                pos_owner[p] = c;
                return true;
            }
        }
        return false;
    };
    for (int c = 0; c < t; ++c) {
        std::vector<char> seen(all.size(), 0);
        if (!augment(c, seen)) return std::nullopt;
    }
    std::map<int, std::vector<int>> alpha;
    std::vector<char> used_pos(all.size(), 0);
    int assigned = 0;
    for (auto [p, c] : pos_owner) {
        alpha[c].push_back(p);
        used_pos[std::lower_bound(all.begin(), all.end(), p) - all.begin()] = 1;
        ++assigned;
    }
    for (size_t pi = 0; pi < all.size() && assigned < ell; ++pi) {
        if (used_pos[pi]) continue;
        int p = all[pi];
        for (int c = 0; c < t; ++c)
            if (std::find(comp_hits[c].begin(), comp_hits[c].end(), p) != comp_hits[c].end()) {
                alpha[c].push_back(p);
                ++assigned;
                break;
            }
    }
    if (assigned != ell) return std::nullopt;
    for (auto& [c, ps] : alpha) std::sort(ps.begin(), ps.end());
    return alpha;
}

}  // namespace

PureModelCheck validate_pure_witness(const RootedGraph& rg, const Graph& h, int ell,
                                     const PureModelWitness& w) {
    PureModelCheck r;
    auto comps = pattern_components(h);
    if (w.component_indices.empty()) {
        r.violations.push_back("no components selected");
        return r;
    }
    if (static_cast<int>(w.component_indices.size()) > ell) {
        r.violations.push_back("more than ell components");
        return r;
    }
    for (int ci : w.component_indices)
        if (ci < 0 || ci >= static_cast<int>(comps.size())) {
            r.violations.push_back("component index out of range");
            return r;
        }
    // Build the sub-pattern over selected components (original H vertex ids).
    VertexSet hverts;
    for (int ci : w.component_indices) hverts = set_union(hverts, comps[ci]);
    // model must assign exactly these pattern vertices
    for (int hv : hverts)
        if (!w.model.branch_sets.count(hv)) {
            r.violations.push_back("branch set missing for selected component vertex");
            return r;
        }
    if (w.model.branch_sets.size() != hverts.size()) {
        r.violations.push_back("branch sets outside selected components");
        return r;
    }
    // validate as model of the induced sub-pattern
    auto sub = induced_subgraph(h, hverts);
    ModelFunction remapped;
    for (const auto& [hv, bs] : w.model.branch_sets) remapped.branch_sets[sub.from_orig[hv]] = bs;
    // re-derive branch edges on the sub-pattern edge list
    for (size_t i = 0; i < sub.graph.edges().size(); ++i) {
        auto [su, sv] = sub.graph.edges()[i];
        Edge orig = make_edge(sub.to_orig[su], sub.to_orig[sv]);
        const auto& he = h.edges();
        auto pos = std::lower_bound(he.begin(), he.end(), orig) - he.begin();
        auto it = w.model.branch_edges.find(static_cast<int>(pos));
        if (it == w.model.branch_edges.end()) {
            r.violations.push_back("missing branch edge for selected component edge");
            return r;
        }
        remapped.branch_edges[static_cast<int>(i)] = it->second;
    }
    auto mc = validate_model_function(rg.graph, sub.graph, remapped);
    if (!mc.ok) {
        r.violations = mc.violations;
        return r;
    }
    // alpha conditions
    std::vector<int> used_positions;
    int total = 0;
    for (int ci : w.component_indices) {
        auto it = w.alpha.find(ci);
        if (it == w.alpha.end() || it->second.empty()) {
            r.violations.push_back("alpha empty for a selected component");
            return r;
        }
        VertexSet comp_image;
        for (int hv : comps[ci])
            comp_image = set_union(comp_image, w.model.branch_sets.at(hv));
        for (int p : it->second) {
            if (p < 0 || p >= static_cast<int>(rg.z.size()) || rg.z[p].empty()) {
                r.violations.push_back("alpha position invalid or empty Z member");
                return r;
            }
            if (set_intersect(comp_image, rg.z[p]).empty()) {
                r.violations.push_back("component image misses an assigned Z member");
                return r;
            }
            used_positions.push_back(p);
            ++total;
        }
    }
    if (sorted_unique(used_positions).size() != used_positions.size()) {
        r.violations.push_back("alpha sets not pairwise disjoint");
        return r;
    }
    if (total != ell) {
        r.violations.push_back("alpha does not cover exactly ell members");
        return r;
    }
    if (static_cast<int>(w.alpha.size()) != static_cast<int>(w.component_indices.size())) {
        r.violations.push_back("alpha defined outside selected components");
        return r;
    }
    r.ok = true;
    return r;
}

std::optional<PureModelWitness> find_pure_model(const RootedGraph& rg, const Graph& h, int ell,
                                                Budget& budget, const VertexSet& within) {
    if (h.num_vertices() == 0) throw std::invalid_argument("pattern must be non-empty");
    if (ell > multiset_size(rg.z)) return std::nullopt;
    auto comps = pattern_components(h);
    int cc = static_cast<int>(comps.size());

    // Connected H: pure models coincide with ordinary models.
    if (cc == 1) {
        auto m = find_hzl_model(rg, h, ell, budget, within);
        if (!m) return std::nullopt;
        PureModelWitness w;
        w.component_indices = {0};
        w.model = *m;
        auto hp = hit_positions(m->image_vertices(), rg.z);
        hp.resize(ell);
        w.alpha[0] = hp;
        return w;
    }

    auto allowed = allowed_mask(rg.graph, within);
    // Enumerate component subsets by increasing size.
    for (int t = 1; t <= std::min(cc, ell); ++t) {
        std::vector<int> sel;
        std::optional<PureModelWitness> result;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<int>(sel.size()) == t) {
                VertexSet hverts;
                for (int ci : sel) hverts = set_union(hverts, comps[ci]);
                auto sub = induced_subgraph(h, hverts);
                return search_models(rg.graph, sub.graph, allowed, budget,
                                     [&](const ModelFunction& eta) {
                    std::vector<std::vector<int>> comp_hits;
                    for (int ci : sel) {
                        VertexSet img;
                        for (int hv : comps[ci])
                            img = set_union(img, eta.branch_sets.at(sub.from_orig[hv]));
                        comp_hits.push_back(hit_positions(img, rg.z));
                    }
                    auto alpha = assign_alpha(comp_hits, ell);
                    if (!alpha) return false;
                    PureModelWitness w;
                    w.component_indices = sel;
                    for (const auto& [sv, bs] : eta.branch_sets)
                        w.model.branch_sets[sub.to_orig[sv]] = bs;
                    for (size_t i = 0; i < sub.graph.edges().size(); ++i) {
                        auto [su, sv] = sub.graph.edges()[i];
                        Edge orig = make_edge(sub.to_orig[su], sub.to_orig[sv]);
                        const auto& he = h.edges();
                        auto pos = std::lower_bound(he.begin(), he.end(), orig) - he.begin();
                        w.model.branch_edges[static_cast<int>(pos)] =
                            eta.branch_edges.at(static_cast<int>(i));
                    }
                    for (const auto& [idx, ps] : *alpha) w.alpha[sel[idx]] = ps;
                    result = std::move(w);
                    return true;
                });
            }
            for (int i = start; i < cc; ++i) {
                sel.push_back(i);
                if (rec(i + 1)) return true;
                sel.pop_back();
            }
            return false;
        };
        if (rec(0)) return result;
    }
    return std::nullopt;
}

std::optional<PureModelWitness> find_pure_model(const RootedGraph& rg, const Graph& h, int ell) {
    Budget b;
    return find_pure_model(rg, h, ell, b);
}

bool has_pure_model(const RootedGraph& rg, const Graph& h, int ell, Budget& budget,
                    const VertexSet& within) {
    return find_pure_model(rg, h, ell, budget, within).has_value();
}

ModelFunction saturate_model(const Graph& g, ModelFunction eta, const VertexSet& region) {
    std::vector<int> owner(g.num_vertices(), -1);
    std::deque<int> q;
    for (const auto& [hv, bs] : eta.branch_sets)
        for (int x : bs) {
            owner[x] = hv;
            q.push_back(x);
        }
    std::vector<char> in_region(g.num_vertices(), 0);
    for (int v : region) in_region[v] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (in_region[w] && owner[w] < 0) {
                owner[w] = owner[v];
                eta.branch_sets[owner[v]].push_back(w);
                q.push_back(w);
            }
    }
    for (auto& [hv, bs] : eta.branch_sets) bs = sorted_unique(std::move(bs));
    return eta;
}

std::optional<Graph> pattern_preset(const std::string& name) {
    if (name == "K1") return Graph(1, {});
    if (name == "K2") return Graph(2, {{0, 1}});
    if (name == "P3") return Graph(3, {{0, 1}, {1, 2}});
    if (name == "C4") return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    if (name == "2K1") return Graph(2, {});
    if (name == "3K1") return Graph(3, {});
    if (name == "2K2") return Graph(4, {{0, 1}, {2, 3}});
    return std::nullopt;
}

}  // namespace ep
