#include "ep/linkage.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ep/maxflow.hpp"

namespace ep {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

bool validate_zk_partition(const std::vector<int>& points, const ZFamily& z, const ZkPartition& p,
                           std::string* why) {
    if (p.classes.size() != p.gamma.size()) return fail(why, "gamma size mismatch");
    std::vector<char> covered(points.size(), 0);
    for (size_t c = 0; c < p.classes.size(); ++c) {
        if (p.classes[c].empty()) return fail(why, "empty class");
        if (static_cast<int>(p.classes[c].size()) > p.k) return fail(why, "class larger than k");
        int pos = p.gamma[c];
        if (pos < 0 || pos >= static_cast<int>(z.size())) return fail(why, "gamma out of range");
        for (int i : p.classes[c]) {
            if (i < 0 || i >= static_cast<int>(points.size()))
                return fail(why, "point index out of range");
            if (covered[i]) return fail(why, "classes overlap");
            covered[i] = 1;
            if (!set_contains(z[pos], points[i]))
                return fail(why, "point outside its class's Z member");
        }
    }
    for (char c : covered)
        if (!c) return fail(why, "classes do not cover all points");
    auto g = p.gamma;
    std::sort(g.begin(), g.end());
    if (std::adjacent_find(g.begin(), g.end()) != g.end())
        return fail(why, "gamma not injective");
    return true;
}

std::optional<ZkPartition> find_zk_partition(const std::vector<int>& points, const ZFamily& z,
                                             int k) {
    int np = static_cast<int>(points.size());
    int m = static_cast<int>(z.size());
    // Capacitated bipartite assignment: point -> position (capacity k each),
    // solved by augmenting paths.
    std::vector<std::vector<int>> options(np);
    for (int i = 0; i < np; ++i)
        for (int j = 0; j < m; ++j)
            if (set_contains(z[j], points[i])) options[i].push_back(j);
    std::vector<std::vector<int>> assigned(m);  // position -> points
    std::vector<int> match(np, -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
        for (int j : options[i]) {
            if (seen[j]) continue;
            seen[j] = 1;
            if (static_cast<int>(assigned[j].size()) < k) {
                assigned[j].push_back(i);
                match[i] = j;
                return true;
            }
            for (int other : assigned[j])
                if (augment(other, seen)) {
                    std::replace(assigned[j].begin(), assigned[j].end(), other, i);
                    match[i] = j;
                    return true;
                }
        }
        return false;
    };
    for (int i = 0; i < np; ++i) {
        std::vector<char> seen(m, 0);
        if (!augment(i, seen)) return std::nullopt;
    }
    ZkPartition p;
    p.k = k;
    for (int j = 0; j < m; ++j) {
        if (assigned[j].empty()) continue;
        std::sort(assigned[j].begin(), assigned[j].end());
        p.classes.push_back(assigned[j]);
        p.gamma.push_back(j);
    }
    return p;
}

RefinedPartition refine_partition(const std::vector<int>& points, const ZFamily& z, int k, int ell,
                                  const ZkPartition& base) {
    if (static_cast<int>(points.size()) != k * ell)
        throw std::invalid_argument("expected exactly k*ell points");
    std::string why;
    if (!validate_zk_partition(points, z, base, &why))
        throw std::invalid_argument("invalid base partition: " + why);

    int np = k * ell;
    std::vector<int> cls(np, -1), zpos(np, -1);
    for (size_t c = 0; c < base.classes.size(); ++c)
        for (int i : base.classes[c]) {
            cls[i] = static_cast<int>(c);
            zpos[i] = base.gamma[c];
        }

    RefinedPartition out;
    std::vector<int> remaining(np);
    std::iota(remaining.begin(), remaining.end(), 0);

    for (int cur_k = k; cur_k >= 1; --cur_k) {
        std::vector<int> class_size(base.classes.size(), 0);
        for (int i : remaining) ++class_size[cls[i]];
        std::vector<int> full;
        for (size_t c = 0; c < class_size.size(); ++c)
            if (class_size[c] == cur_k) full.push_back(static_cast<int>(c));
        int nfull = static_cast<int>(full.size());

        std::vector<int> sel;
        std::optional<std::pair<int, int>> anchor;
        std::vector<char> class_used(base.classes.size(), 0);
        if (ell == 1) {
            int pick = full.empty() ? remaining.front() : -1;
            if (pick < 0)
                for (int i : remaining)
                    if (cls[i] == full.front()) {
                        pick = i;
                        break;
                    }
            sel = {pick};
            class_used[cls[pick]] = 1;
        } else {
            // Pick a consecutive (in remaining order) pair from distinct
            // classes so that hitting the rest of the full classes still fits
            // in ell picks.
            int pair_at = -1;
            for (size_t p = 0; p + 1 < remaining.size(); ++p) {
                int i = remaining[p], j = remaining[p + 1];
                if (cls[i] == cls[j]) continue;
                int hit = (class_size[cls[i]] == cur_k ? 1 : 0) +
                          (class_size[cls[j]] == cur_k ? 1 : 0);
                if (2 + (nfull - hit) <= ell) {
                    pair_at = static_cast<int>(p);
                    break;
                }
            }
            if (pair_at < 0) throw std::logic_error("no admissible consecutive pair");
            int a = remaining[pair_at], b = remaining[pair_at + 1];
            sel = {a, b};
            anchor = {a, b};
            class_used[cls[a]] = class_used[cls[b]] = 1;
            for (int c : full)
                if (!class_used[c]) {
                    for (int i : remaining)
                        if (cls[i] == c) {
                            sel.push_back(i);
                            break;
                        }
                    class_used[c] = 1;
                }
            for (int i : remaining) {
                if (static_cast<int>(sel.size()) == ell) break;
                if (!class_used[cls[i]]) {
                    sel.push_back(i);
                    class_used[cls[i]] = 1;
                }
            }
            if (static_cast<int>(sel.size()) != ell)
                throw std::logic_error("could not fill selection to ell");
        }
        std::sort(sel.begin(), sel.end());
        std::map<int, int> beta;
        for (int i : sel) beta[i] = zpos[i];
        out.index_classes.push_back(sel);
        out.betas.push_back(std::move(beta));
        out.anchors.push_back(anchor);
        std::vector<int> next;
        for (int i : remaining)
            if (!std::binary_search(sel.begin(), sel.end(), i)) next.push_back(i);
        remaining = std::move(next);
    }
    return out;
}

bool validate_refined(const std::vector<int>& points, const ZFamily& z, int k, int ell,
                      const RefinedPartition& r, std::string* why) {
    if (static_cast<int>(points.size()) != k * ell) return fail(why, "points size != k*ell");
    if (static_cast<int>(r.index_classes.size()) != k) return fail(why, "need exactly k classes");
    if (r.betas.size() != r.index_classes.size() || r.anchors.size() != r.index_classes.size())
        return fail(why, "betas/anchors size mismatch");
    std::vector<char> covered(points.size(), 0);
    for (int j = 0; j < k; ++j) {
        const auto& cl = r.index_classes[j];
        if (static_cast<int>(cl.size()) != ell) return fail(why, "class size != ell");
        std::vector<int> used_pos;
        for (int i : cl) {
            if (i < 0 || i >= static_cast<int>(points.size()))
                return fail(why, "index out of range");
            if (covered[i]) return fail(why, "classes overlap");
            covered[i] = 1;
            auto it = r.betas[j].find(i);
            if (it == r.betas[j].end()) return fail(why, "beta missing an index");
            int pos = it->second;
            if (pos < 0 || pos >= static_cast<int>(z.size()))
                return fail(why, "beta position out of range");
            if (!set_contains(z[pos], points[i]))
                return fail(why, "point outside its beta Z member");
            used_pos.push_back(pos);
        }
        std::sort(used_pos.begin(), used_pos.end());
        if (std::adjacent_find(used_pos.begin(), used_pos.end()) != used_pos.end())
            return fail(why, "beta not injective");
        if (ell >= 2) {
            if (!r.anchors[j]) return fail(why, "missing anchor pair");
            auto [a, b] = *r.anchors[j];
            if (!(a < b)) return fail(why, "anchor pair not increasing");
            if (!std::binary_search(cl.begin(), cl.end(), a) ||
                !std::binary_search(cl.begin(), cl.end(), b))
                return fail(why, "anchors not in their class");
            for (int jj = j; jj < k; ++jj)
                for (int c : r.index_classes[jj])
                    if (a < c && c < b) return fail(why, "later-class index between anchors");
        }
    }
    for (char c : covered)
        if (!c) return fail(why, "classes do not cover all indices");
    return true;
}

bool validate_linkage(const RootedGraph& rg, const VertexSet& y, int k, const Linkage& l,
                      std::string* why) {
    const Graph& g = rg.graph;
    if (l.paths.size() != l.z_endpoints.size()) return fail(why, "endpoint list size mismatch");
    std::vector<char> used(g.num_vertices(), 0);
    for (size_t p = 0; p < l.paths.size(); ++p) {
        const auto& path = l.paths[p];
        if (path.empty()) return fail(why, "empty path");
        if (path.front() != l.z_endpoints[p]) return fail(why, "path does not start at its endpoint");
        bool in_some_z = false;
        for (const auto& zs : rg.z)
            if (set_contains(zs, path.front())) in_some_z = true;
        if (!in_some_z) return fail(why, "path start not in any Z member");
        if (!set_contains(y, path.back())) return fail(why, "path end not in Y");
        for (size_t i = 0; i < path.size(); ++i) {
            int v = path[i];
            if (v < 0 || v >= g.num_vertices()) return fail(why, "path vertex out of range");
            if (used[v]) return fail(why, "paths not vertex-disjoint");
            used[v] = 1;
            if (i + 1 < path.size() && !g.has_edge(v, path[i + 1]))
                return fail(why, "path uses a non-edge");
        }
    }
    if (!validate_zk_partition(l.z_endpoints, rg.z, l.partition, why)) return false;
    return true;
}

int missing_positions(const ZFamily& z, const VertexSet& a) {
    int count = 0;
    for (const auto& zs : z)
        if (!set_minus(zs, a).empty()) ++count;
    return count;
}

LinkageOrSeparation linkage_or_separation(const RootedGraph& rg, const VertexSet& y, int k,
                                          int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    const Graph& g = rg.graph;
    int n = g.num_vertices();

    // Augmented graph: per non-empty Z member, a fresh block of k vertices
    // complete to it. Paths leave blocks but never re-enter them.
    std::vector<Edge> edges(g.edges());
    std::vector<int> block_pos;  // block index -> Z position
    int next = n;
    VertexSet sources;
    for (size_t j = 0; j < rg.z.size(); ++j) {
        if (rg.z[j].empty()) continue;
        for (int c = 0; c < k; ++c) {
            for (int zv : rg.z[j]) edges.push_back({next, zv});
            sources.push_back(next);
            block_pos.push_back(static_cast<int>(j));
            ++next;
        }
    }
    Graph aug(next, edges);
    auto flow = vertex_disjoint_paths(aug, sources, y, k * ell, /*one_way_sources=*/true);

    LinkageOrSeparation out;
    if (flow.value >= k * ell) {
        Linkage l;
        std::vector<int> endpoint_pos;
        for (auto& path : flow.paths) {
            int w = path.front();
            int pos = block_pos[w - n];
            path.erase(path.begin());  // drop the auxiliary block vertex
            l.z_endpoints.push_back(path.front());
            endpoint_pos.push_back(pos);
            l.paths.push_back(std::move(path));
        }
        l.partition.k = k;
        std::map<int, std::vector<int>> by_pos;
        for (size_t i = 0; i < endpoint_pos.size(); ++i)
            by_pos[endpoint_pos[i]].push_back(static_cast<int>(i));
        for (auto& [pos, idxs] : by_pos) {
            l.partition.classes.push_back(idxs);
            l.partition.gamma.push_back(pos);
        }
        out.linkage = std::move(l);
        return out;
    }

    // Translate the source-minimal cut into a separation of G. A vertex is on
    // the A side iff its entry node is residual-reachable; an edge goes to A
    // iff either exit node is reachable.
    Separation sep;
    for (int v = 0; v < n; ++v) {
        if (flow.in_reach[v]) sep.a_vertices.push_back(v);
        if (!flow.out_reach[v]) sep.b_vertices.push_back(v);
    }
    for (auto [u, v] : g.edges()) {
        if (flow.out_reach[u] || flow.out_reach[v])
            sep.a_edges.push_back({u, v});
        else
            sep.b_edges.push_back({u, v});
    }
    out.separation = std::move(sep);
    return out;
}

}  // namespace ep
