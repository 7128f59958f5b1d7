#include "ep/maxflow.hpp"

#include <deque>

namespace ep {

namespace {

constexpr int INF = 1 << 29;

struct Arc {
    int to, cap, flow = 0;
    size_t rev;
};

struct Net {
    std::vector<std::vector<Arc>> arcs;
    explicit Net(int nodes) : arcs(nodes) {}
    void add(int u, int v, int cap) {
        arcs[u].push_back({v, cap, 0, arcs[v].size()});
        arcs[v].push_back({u, 0, 0, arcs[u].size() - 1});
    }
    int residual(const Arc& a) const { return a.cap - a.flow; }
};

}  // namespace

VertexFlow vertex_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                                 int limit, bool one_way_sources) {
    int n = g.num_vertices();
    auto vin = [](int v) { return 2 * v; };
    auto vout = [](int v) { return 2 * v + 1; };
    int s = 2 * n, t = 2 * n + 1;
    Net net(2 * n + 2);
    std::vector<char> is_source(n, 0);
    for (int v : sources) is_source[v] = 1;
    for (int v = 0; v < n; ++v) net.add(vin(v), vout(v), 1);
    for (auto [u, v] : g.edges()) {
        if (!(one_way_sources && is_source[v])) net.add(vout(u), vin(v), INF);
        if (!(one_way_sources && is_source[u])) net.add(vout(v), vin(u), INF);
    }
    for (int v : sources) net.add(s, vin(v), INF);
    for (int v : targets) net.add(vout(v), t, INF);

    VertexFlow result;
    // BFS augmentation; each augmenting path adds exactly one unit.
    while (result.value < limit) {
        std::vector<std::pair<int, size_t>> prev(net.arcs.size(), {-1, 0});
        std::vector<char> seen(net.arcs.size(), 0);
        std::deque<int> q{s};
        seen[s] = 1;
        bool reached = false;
        while (!q.empty() && !reached) {
            int u = q.front();
            q.pop_front();
            for (size_t i = 0; i < net.arcs[u].size(); ++i) {
                const Arc& a = net.arcs[u][i];
                if (net.residual(a) <= 0 || seen[a.to]) continue;
                seen[a.to] = 1;
                prev[a.to] = {u, i};
                if (a.to == t) {
                    reached = true;
                    break;
                }
                q.push_back(a.to);
            }
        }
        if (!reached) break;
        for (int v = t; v != s;) {
            auto [u, i] = prev[v];
            Arc& a = net.arcs[u][i];
            a.flow += 1;
            net.arcs[a.to][a.rev].flow -= 1;
            v = u;
        }
        ++result.value;
    }

    if (result.value >= limit) {
        // Path decomposition: walk unit flow from each used source arc.
        for (Arc& sa : net.arcs[s]) {
            if (sa.flow <= 0) continue;
            sa.flow = 0;
            std::vector<int> path;
            int u = sa.to;
            while (u != t) {
                if (u % 2 == 0 && u < 2 * n) path.push_back(u / 2);
                for (Arc& a : net.arcs[u]) {
                    if (a.flow <= 0) continue;
                    a.flow = 0;
                    net.arcs[a.to][a.rev].flow = 0;
                    u = a.to;
                    break;
                }
            }
            result.paths.push_back(std::move(path));
        }
        return result;
    }

    // Residual reachability from s gives the canonical source-minimal cut.
    std::vector<char> reach(net.arcs.size(), 0);
    std::deque<int> q{s};
    reach[s] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (const Arc& a : net.arcs[u])
            if (net.residual(a) > 0 && !reach[a.to]) {
                reach[a.to] = 1;
                q.push_back(a.to);
            }
    }
    result.in_reach.assign(n, 0);
    result.out_reach.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        result.in_reach[v] = reach[vin(v)];
        result.out_reach[v] = reach[vout(v)];
        if (reach[vin(v)] && !reach[vout(v)]) result.cut.push_back(v);
    }
    return result;
}

}  // namespace ep
