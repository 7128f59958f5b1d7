#include "ep/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ep {

VertexSet sorted_unique(std::vector<int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

EdgeSet sorted_unique_edges(std::vector<Edge> es) {
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return es;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        norm.push_back(make_edge(u, v));
    }
    edges_ = sorted_unique_edges(std::move(norm));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::grid(int g, int h) {
    if (g < 1 || h < 1) throw std::invalid_argument("grid dimensions must be positive");
    std::vector<Edge> edges;
    auto id = [h](int i, int j) { return (i - 1) * h + (j - 1); };
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= h; ++j) {
            if (j < h) edges.push_back(make_edge(id(i, j), id(i, j + 1)));
            if (i < g) edges.push_back(make_edge(id(i, j), id(i + 1, j)));
        }
    Graph gr(g * h, edges);
    gr.grid_dims_ = {g, h};
    return gr;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::pair<int, int> Graph::grid_dims() const {
    if (!grid_dims_) throw std::logic_error("graph carries no grid labeling");
    return *grid_dims_;
}

int Graph::grid_id(int row, int col) const {
    auto [g, h] = grid_dims();
    if (row < 1 || row > g || col < 1 || col > h)
        throw std::invalid_argument("grid coordinate out of range");
    return (row - 1) * h + (col - 1);
}

std::pair<int, int> Graph::grid_coord(int v) const {
    auto [g, h] = grid_dims();
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    return {v / h + 1, v % h + 1};
}

VertexSet Graph::grid_row(int row) const {
    auto [g, h] = grid_dims();
    (void)g;
    VertexSet out;
    for (int j = 1; j <= h; ++j) out.push_back(grid_id(row, j));
    return sorted_unique(std::move(out));
}

VertexSet Graph::grid_column(int col) const {
    auto [g, h] = grid_dims();
    (void)h;
    VertexSet out;
    for (int i = 1; i <= g; ++i) out.push_back(grid_id(i, col));
    return sorted_unique(std::move(out));
}

void Graph::set_grid_dims(int g, int h) {
    if (g * h != n_) throw std::invalid_argument("grid dims do not match vertex count");
    grid_dims_ = {g, h};
}

void validate_rooted(const RootedGraph& rg) {
    for (const auto& zset : rg.z)
        for (int v : zset)
            if (v < 0 || v >= rg.graph.num_vertices())
                throw std::invalid_argument("Z member contains unknown vertex");
}

int multiset_size(const ZFamily& z) {
    int count = 0;
    for (const auto& s : z)
        if (!s.empty()) ++count;
    return count;
}

ZFamily restrict_multiset(const ZFamily& z, const VertexSet& b) {
    ZFamily out;
    out.reserve(z.size());
    for (const auto& s : z) out.push_back(set_intersect(s, b));
    return out;
}

ZFamily subtract_multiset(const ZFamily& z, const VertexSet& b) {
    ZFamily out;
    out.reserve(z.size());
    for (const auto& s : z) out.push_back(set_minus(s, b));
    return out;
}

int hits_count(const VertexSet& f, const ZFamily& z) {
    return static_cast<int>(hit_positions(f, z).size());
}

std::vector<int> hit_positions(const VertexSet& f, const ZFamily& z) {
    std::vector<int> out;
    for (size_t i = 0; i < z.size(); ++i)
        if (!z[i].empty() && !set_intersect(f, z[i]).empty()) out.push_back(static_cast<int>(i));
    return out;
}

SeparationCheck validate_separation(const Graph& g, const Separation& s) {
    SeparationCheck r;
    auto bad_vertex = [&](const VertexSet& vs) {
        for (int v : vs)
            if (v < 0 || v >= g.num_vertices()) return true;
        return false;
    };
    if (bad_vertex(s.a_vertices) || bad_vertex(s.b_vertices))
        r.violations.push_back("vertex outside G");
    auto check_edges = [&](const EdgeSet& es, const VertexSet& vs, const char* side) {
        for (auto [u, v] : es) {
            if (!g.has_edge(u, v)) r.violations.push_back(std::string(side) + " contains non-edge of G");
            if (!set_contains(vs, u) || !set_contains(vs, v))
                r.violations.push_back(std::string(side) + " edge endpoint outside its vertex set");
        }
    };
    check_edges(s.a_edges, s.a_vertices, "A");
    check_edges(s.b_edges, s.b_vertices, "B");

    VertexSet vu = set_union(s.a_vertices, s.b_vertices);
    if (static_cast<int>(vu.size()) != g.num_vertices())
        r.violations.push_back("V(A) union V(B) != V(G)");
    EdgeSet eu = sorted_unique_edges([&] {
        std::vector<Edge> all(s.a_edges.begin(), s.a_edges.end());
        all.insert(all.end(), s.b_edges.begin(), s.b_edges.end());
        return all;
    }());
    if (eu != g.edges()) r.violations.push_back("E(A) union E(B) != E(G)");
    EdgeSet ei;
    std::set_intersection(s.a_edges.begin(), s.a_edges.end(), s.b_edges.begin(), s.b_edges.end(),
                          std::back_inserter(ei));
    if (!ei.empty()) r.violations.push_back("E(A) and E(B) share an edge");

    r.ok = r.violations.empty();
    if (r.ok) r.order = s.order();
    return r;
}

DisjointUnion disjoint_union(const std::vector<Graph>& graphs) {
    DisjointUnion out;
    int total = 0;
    std::vector<Edge> edges;
    for (const auto& g : graphs) {
        out.component_offsets.push_back(total);
        for (auto [u, v] : g.edges()) edges.push_back({u + total, v + total});
        total += g.num_vertices();
    }
    out.graph = Graph(total, edges);
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    VertexSet all(g.num_vertices());
    std::iota(all.begin(), all.end(), 0);
    return connected_components_within(g, all);
}

std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& subset) {
    std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
    for (int v : subset) in[v] = 1;
    std::vector<VertexSet> comps;
    for (int s : subset) {
        if (seen[s]) continue;
        VertexSet comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected_subset(const Graph& g, const VertexSet& subset) {
    if (subset.empty()) return false;
    return connected_components_within(g, subset).size() == 1;
}

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    InducedGraph out;
    out.from_orig.assign(g.num_vertices(), -1);
    for (int v : keep) {
        out.from_orig[v] = static_cast<int>(out.to_orig.size());
        out.to_orig.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (out.from_orig[u] >= 0 && out.from_orig[v] >= 0)
            edges.push_back(make_edge(out.from_orig[u], out.from_orig[v]));
    out.graph = Graph(static_cast<int>(out.to_orig.size()), edges);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources, const VertexSet& forbidden) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::deque<int> q;
    std::vector<char> blocked(g.num_vertices(), 0);
    for (int v : forbidden) blocked[v] = 1;
    for (int s : sources)
        if (!blocked[s] && dist[s] < 0) {
            dist[s] = 0;
            q.push_back(s);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (!blocked[w] && dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

std::vector<int> shortest_path_to(const Graph& g, int from, const VertexSet& targets,
                                  const VertexSet& forbidden) {
    if (set_contains(forbidden, from)) return {};
    std::vector<int> prev(g.num_vertices(), -2);
    std::vector<char> blocked(g.num_vertices(), 0);
    for (int v : forbidden) blocked[v] = 1;
    std::deque<int> q{from};
    prev[from] = -1;
    int found = set_contains(targets, from) ? from : -1;
    while (!q.empty() && found < 0) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v)) {
            if (blocked[w] || prev[w] != -2) continue;
            prev[w] = v;
            if (set_contains(targets, w)) {
                found = w;
                break;
            }
            q.push_back(w);
        }
    }
    if (found < 0) return {};
    std::vector<int> path;
    for (int v = found; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace ep
