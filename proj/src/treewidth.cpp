#include "ep/treewidth.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ep {

TdCheck validate_td(const Graph& g, const TreeDecomposition& td) {
    TdCheck r;
    int t = td.tree.num_vertices();
    if (static_cast<int>(td.bags.size()) != t) {
        r.violations.push_back("bag count differs from tree node count");
        return r;
    }
    if (t == 0 || td.tree.num_edges() != t - 1 || connected_components(td.tree).size() != 1) {
        r.violations.push_back("decomposition tree is not a tree");
        return r;
    }
    std::vector<char> covered(g.num_vertices(), 0);
    for (const auto& b : td.bags)
        for (int v : b) {
            if (v < 0 || v >= g.num_vertices()) {
                r.violations.push_back("bag contains unknown vertex");
                return r;
            }
            covered[v] = 1;
        }
    for (char c : covered)
        if (!c) {
            r.violations.push_back("(T1) bags do not cover all vertices");
            return r;
        }
    for (auto [u, v] : g.edges()) {
        bool found = false;
        for (const auto& b : td.bags)
            if (set_contains(b, u) && set_contains(b, v)) found = true;
        if (!found) {
            r.violations.push_back("(T2) edge not inside any bag");
            return r;
        }
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        VertexSet nodes;
        for (int x = 0; x < t; ++x)
            if (set_contains(td.bags[x], v)) nodes.push_back(x);
        if (connected_components_within(td.tree, nodes).size() != 1) {
            r.violations.push_back("(T3) nodes holding vertex " + std::to_string(v) +
                                   " not connected");
            return r;
        }
    }
    r.ok = true;
    r.width = td.width();
    return r;
}

DSubtreeOutcome d_subtree_pack_or_hit(const Graph& tree, const DSubtreeFamily& f, int k,
                                      Budget& budget) {
    if (connected_components(tree).size() != 1 ||
        tree.num_edges() != tree.num_vertices() - 1)
        throw std::invalid_argument("host is not a tree");
    for (const auto& mem : f.members) {
        if (mem.empty()) throw std::invalid_argument("empty family member");
        if (static_cast<int>(connected_components_within(tree, mem).size()) > f.d)
            throw std::invalid_argument("member exceeds d components");
    }

    int n = static_cast<int>(f.members.size());
    // exact maximum disjoint subfamily (branch and bound over members)
    std::vector<std::vector<char>> conflict(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            conflict[i][j] = conflict[j][i] =
                !set_intersect(f.members[i], f.members[j]).empty();
    std::vector<int> best_pack, cur;
    std::function<void(int)> packrec = [&](int i) {
        budget.tick();
        if (cur.size() + (n - i) <= best_pack.size()) return;
        if (i == n) {
            if (cur.size() > best_pack.size()) best_pack = cur;
            return;
        }
        bool fits = true;
        for (int j : cur)
            if (conflict[j][i]) fits = false;
        if (fits) {
            cur.push_back(i);
            packrec(i + 1);
            cur.pop_back();
        }
        packrec(i + 1);
    };
    packrec(0);

    DSubtreeOutcome out;
    out.nu = static_cast<int>(best_pack.size());
    if (out.nu >= k) {
        best_pack.resize(k);
        out.packing = best_pack;
        return out;
    }

    // exact minimum hitting set over tree nodes (violator-driven)
    std::optional<VertexSet> best_hit;
    VertexSet hit;
    std::function<void()> hitrec = [&]() {
        budget.tick();
        if (best_hit && hit.size() >= best_hit->size()) return;
        int unhit = -1;
        for (int i = 0; i < n && unhit < 0; ++i)
            if (set_intersect(f.members[i], hit).empty()) unhit = i;
        if (unhit < 0) {
            best_hit = hit;
            return;
        }
        for (int x : f.members[unhit]) {
            hit = set_union(hit, {x});
            hitrec();
            hit = set_minus(hit, {x});
        }
    };
    hitrec();
    long long bound =
        (static_cast<long long>(f.d) * f.d - f.d + 1) * (k - 1);
    if (static_cast<long long>(best_hit->size()) > bound)
        throw std::logic_error("hitting set exceeds the packing-dual bound");
    out.hitting = *best_hit;
    return out;
}

TwPackOrHit bounded_tw_pack_or_hit(const RootedGraph& rg, const Graph& h, int ell, int k,
                                   const TreeDecomposition& td, bool pure, Budget& budget) {
    auto tdc = validate_td(rg.graph, td);
    if (!tdc.ok) throw std::invalid_argument("invalid tree decomposition: " + tdc.violations.front());

    int hn = h.num_vertices();
    long long hfac = static_cast<long long>(hn) * hn - hn + 1;
    TwPackOrHit out;
    out.stated_bound = static_cast<long long>(tdc.width - 1) * hfac * (k - 1);
    out.safe_bound = static_cast<long long>(tdc.width + 1) * hfac * (k - 1);

    // nodes of the decomposition tree whose bag holds each vertex
    int t = td.tree.num_vertices();
    std::vector<VertexSet> holding(rg.graph.num_vertices());
    for (int x = 0; x < t; ++x)
        for (int v : td.bags[x]) holding[v].push_back(x);
    for (auto& s : holding) s = sorted_unique(std::move(s));

    auto goods = all_minimal_good_sets(rg, h, ell, pure, budget);
    int d = std::max<size_t>(1, connected_components(h).size());
    DSubtreeFamily fam;
    fam.d = d;
    for (const auto& gset : goods) {
        VertexSet nodes;
        for (int v : gset) nodes = set_union(nodes, holding[v]);
        if (static_cast<int>(connected_components_within(td.tree, nodes).size()) > d)
            throw std::logic_error("model node image exceeds cc(H) subtrees");
        fam.members.push_back(std::move(nodes));
    }

    auto ds = d_subtree_pack_or_hit(td.tree, fam, k, budget);
    if (ds.packing) {
        VertexSet used;
        for (int idx : *ds.packing) {
            const auto& gset = goods[idx];
            if (!set_intersect(used, gset).empty())
                throw std::logic_error("disjoint node images yielded overlapping models");
            used = set_union(used, gset);
            if (pure)
                out.pure_packing.push_back(*find_pure_model(rg, h, ell, budget, gset));
            else
                out.packing.push_back(*find_hzl_model(rg, h, ell, budget, gset));
        }
        return out;
    }

    VertexSet s;
    for (int x : *ds.hitting) s = set_union(s, td.bags[x]);
    if (static_cast<long long>(s.size()) > out.safe_bound)
        throw std::logic_error("deletion set exceeds the safe width bound");
    VertexSet rest;
    for (int v = 0; v < rg.graph.num_vertices(); ++v)
        if (!set_contains(s, v)) rest.push_back(v);
    bool alive = rest.empty() ? false
                              : (pure ? has_pure_model(rg, h, ell, budget, rest)
                                      : has_hzl_model(rg, h, ell, budget, rest));
    if (alive) throw std::logic_error("deletion set failed recertification");
    out.deletion_set = std::move(s);
    return out;
}

}  // namespace ep
