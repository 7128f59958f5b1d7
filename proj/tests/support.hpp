#pragma once

// Shared helpers for the test suite: seeded random instance generators, an
// independent disjoint-path oracle (re-implemented from scratch so it cannot
// share bugs with the library's flow code), and planted-instance builders.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ep/graph.hpp"
#include "ep/rooted_grid.hpp"

namespace support {

using Rng = std::mt19937;

inline ep::Graph random_graph(int n, double p, Rng& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<ep::Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.push_back({u, v});
    return ep::Graph(n, es);
}

// Random spanning-tree skeleton plus extra edges: always connected.
inline ep::Graph random_connected_graph(int n, double extra, Rng& rng) {
    std::vector<ep::Edge> es;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        es.push_back(ep::make_edge(pick(rng), v));
    }
    std::bernoulli_distribution coin(extra);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.push_back(ep::make_edge(u, v));
    return ep::Graph(n, ep::sorted_unique_edges(std::move(es)));
}

inline ep::Graph random_tree(int n, Rng& rng) { return random_connected_graph(n, 0.0, rng); }

inline ep::ZFamily random_z_family(int n, int members, int max_size, Rng& rng) {
    ep::ZFamily z;
    std::uniform_int_distribution<int> size(1, std::max(1, max_size));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < members; ++i) {
        std::vector<int> zi;
        int s = size(rng);
        for (int j = 0; j < s; ++j) zi.push_back(pick(rng));
        z.push_back(ep::sorted_unique(std::move(zi)));
    }
    return z;
}

// Z family with pairwise disjoint members (when n allows it).
inline ep::ZFamily random_disjoint_z_family(int n, int members, int max_size, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    ep::ZFamily z;
    std::uniform_int_distribution<int> size(1, std::max(1, max_size));
    size_t at = 0;
    for (int i = 0; i < members; ++i) {
        std::vector<int> zi;
        int s = size(rng);
        for (int j = 0; j < s && at < perm.size(); ++j) zi.push_back(perm[at++]);
        if (zi.empty()) break;
        z.push_back(ep::sorted_unique(std::move(zi)));
    }
    return z;
}

// Identity model of a grid host in itself.
inline ep::GridModel identity_grid_model(const ep::Graph& g) {
    auto [rows, cols] = g.grid_dims();
    ep::GridModel m;
    m.rows = rows;
    m.cols = cols;
    for (int v = 0; v < g.num_vertices(); ++v) m.eta.branch_sets[v] = {v};
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) m.eta.branch_edges[static_cast<int>(i)] = es[i];
    return m;
}

// Independent maximum vertex-disjoint path count, written directly against the
// split-vertex digraph with DFS augmentation. Endpoints shared between the
// source and target side count once.
inline int flow_oracle(const ep::Graph& g, const ep::VertexSet& sources,
                       const ep::VertexSet& targets) {
    int n = g.num_vertices();
    // nodes: 2v = in, 2v+1 = out, 2n = super source, 2n+1 = super sink
    int N = 2 * n + 2, S = 2 * n, T = 2 * n + 1;
    struct Arc {
        int to, cap;
    };
    std::vector<Arc> arcs;
    std::vector<std::vector<int>> out(N);
    auto add = [&](int a, int b, int c) {
        out[a].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({b, c});
        out[b].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({a, 0});
    };
    for (int v = 0; v < n; ++v) add(2 * v, 2 * v + 1, 1);
    for (auto [u, v] : g.edges()) {
        add(2 * u + 1, 2 * v, 1);
        add(2 * v + 1, 2 * u, 1);
    }
    for (int s : sources) add(S, 2 * s, 1);
    for (int t : targets) add(2 * t + 1, T, 1);
    int flow = 0;
    while (true) {
        std::vector<int> via(N, -1);
        std::vector<char> seen(N, 0);
        std::vector<int> stack{S};
        seen[S] = 1;
        while (!stack.empty() && !seen[T]) {
            int a = stack.back();
            stack.pop_back();
            for (int e : out[a]) {
                if (arcs[e].cap <= 0 || seen[arcs[e].to]) continue;
                seen[arcs[e].to] = 1;
                via[arcs[e].to] = e;
                stack.push_back(arcs[e].to);
                if (arcs[e].to == T) break;
            }
        }
        if (!seen[T]) break;
        for (int b = T; b != S;) {
            int e = via[b];
            arcs[e].cap -= 1;
            arcs[e ^ 1].cap += 1;
            b = arcs[e ^ 1].to;
        }
        ++flow;
    }
    return flow;
}

// All labeled connected graphs on n vertices (edge-subset enumeration; meant
// for n <= 6).
inline std::vector<ep::Graph> all_connected_graphs(int n) {
    std::vector<ep::Edge> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.push_back({u, v});
    std::vector<ep::Graph> out;
    for (long long mask = 0; mask < (1LL << all.size()); ++mask) {
        std::vector<ep::Edge> es;
        for (size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) es.push_back(all[i]);
        ep::Graph g(n, es);
        if (ep::connected_components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace support
