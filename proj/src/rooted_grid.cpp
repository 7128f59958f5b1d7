#include "ep/rooted_grid.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ep {

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

Edge find_branch_edge(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int u : a)
        for (int w : g.neighbors(u))
            if (set_contains(b, w)) return make_edge(u, w);
    throw std::logic_error("no host edge between adjacent branch sets");
}

// Fill in branch edges of a grid-pattern model from its branch sets.
void wire_pattern_edges(const Graph& host, const Graph& pattern, ModelFunction& eta) {
    eta.branch_edges.clear();
    const auto& pe = pattern.edges();
    for (size_t i = 0; i < pe.size(); ++i)
        eta.branch_edges[static_cast<int>(i)] =
            find_branch_edge(host, eta.branch_sets.at(pe[i].first), eta.branch_sets.at(pe[i].second));
}

}  // namespace

bool validate_grid_model(const Graph& g, const GridModel& m, std::string* why) {
    if (m.rows < 1 || m.cols < 1) return fail(why, "bad grid dimensions");
    auto check = validate_model_function(g, Graph::grid(m.rows, m.cols), m.eta);
    if (!check.ok) return fail(why, check.violations.front());
    return true;
}

bool validate_rooted_grid_model(const RootedGraph& rg, int k, int ell, const RootedGridModel& m,
                                std::string* why) {
    if (!validate_grid_model(rg.graph, m.grid, why)) return false;
    if (m.grid.rows != m.grid.cols) return fail(why, "rooted grid model must be square");
    if (m.grid.rows < k * ell) return fail(why, "order below k*ell");
    if (static_cast<int>(m.roots.size()) != k * ell) return fail(why, "need k*ell roots");
    for (int i = 0; i < k * ell; ++i)
        if (!set_contains(m.grid.cell(1, i + 1), m.roots[i]))
            return fail(why, "root outside its first-row branch set");
    if (m.partition.k != k) return fail(why, "partition capacity mismatch");
    return validate_zk_partition(m.roots, rg.z, m.partition, why);
}

GridModel restrict_grid_model(const Graph& g, const GridModel& m, const VertexSet& s) {
    if (m.rows != m.cols) throw std::invalid_argument("restriction needs a square grid model");
    int n = m.rows;
    VertexSet del = sorted_unique(s);
    int k = static_cast<int>(del.size());
    if (k >= n) throw std::invalid_argument("must delete fewer vertices than the order");

    auto touched = [&](const VertexSet& cell) { return !set_intersect(cell, del).empty(); };
    std::vector<int> rows, cols;  // surviving 1-based indices
    for (int i = 1; i <= n; ++i) {
        bool row_hit = false, col_hit = false;
        for (int j = 1; j <= n; ++j) {
            if (touched(m.cell(i, j))) row_hit = true;
            if (touched(m.cell(j, i))) col_hit = true;
        }
        if (!row_hit) rows.push_back(i);
        if (!col_hit) cols.push_back(i);
    }
    int a = static_cast<int>(rows.size()), b = static_cast<int>(cols.size());

    // alpha(x,y): a vertical run in surviving column cols[y] plus a horizontal
    // run in surviving row rows[x]; last row/column absorb the remainder.
    std::vector<std::vector<VertexSet>> cells(a, std::vector<VertexSet>(b));
    for (int x = 0; x < a; ++x)
        for (int y = 0; y < b; ++y) {
            int row_lo = (x == 0 ? 0 : rows[x - 1]), row_hi = (x == a - 1 ? n : rows[x]);
            int col_lo = (y == 0 ? 0 : cols[y - 1]), col_hi = (y == b - 1 ? n : cols[y]);
            VertexSet u;
            for (int r = row_lo + 1; r <= row_hi; ++r) u = set_union(u, m.cell(r, cols[y]));
            for (int c = col_lo + 1; c <= col_hi; ++c) u = set_union(u, m.cell(rows[x], c));
            cells[x][y] = std::move(u);
        }

    // Merge trailing rows/columns down to exactly n-k of each.
    while (static_cast<int>(cells.size()) > n - k) {
        auto last = std::move(cells.back());
        cells.pop_back();
        for (size_t y = 0; y < last.size(); ++y)
            cells.back()[y] = set_union(cells.back()[y], last[y]);
    }
    for (auto& row : cells)
        while (static_cast<int>(row.size()) > n - k) {
            auto last = std::move(row.back());
            row.pop_back();
            row.back() = set_union(row.back(), last);
        }

    GridModel out;
    out.rows = out.cols = n - k;
    for (int x = 0; x < n - k; ++x)
        for (int y = 0; y < n - k; ++y) out.eta.branch_sets[x * (n - k) + y] = cells[x][y];
    wire_pattern_edges(g, Graph::grid(n - k, n - k), out.eta);
    std::string why;
    if (!validate_grid_model(g, out, &why))
        throw std::logic_error("restricted grid model invalid: " + why);
    return out;
}

RootedGridOutcome rooted_grid_or_separation(const RootedGraph& rg, const GridModel& m, int g,
                                            int k, int ell, bool permissive) {
    const Graph& host = rg.graph;
    std::string why;
    if (!validate_grid_model(host, m, &why)) throw std::invalid_argument("bad grid model: " + why);
    if (m.rows != m.cols) throw std::invalid_argument("need a square grid model");
    int n = m.rows;
    if (g < k * ell) throw std::invalid_argument("g must be at least k*ell");
    long long strict_n = static_cast<long long>(g) * (static_cast<long long>(k) * k * ell * ell + 1) +
                         static_cast<long long>(k) * ell;
    if (!permissive && n < strict_n) throw std::invalid_argument("host grid order below bound");

    RootedGridOutcome out;
    auto inconclusive = [&]() {
        out.inconclusive = true;
        return out;
    };
    if (permissive && (n < 2 * k * ell || n < g + k * ell)) return inconclusive();

    // host vertex -> 1-based column of the grid model (-1 outside the image)
    std::vector<int> column_of(host.num_vertices(), -1);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            for (int v : m.cell(r, c)) column_of[v] = c;

    std::vector<char> marked(n + 1, 0);

    for (int t = 1; t <= k * ell; ++t) {
        std::vector<int> chosen;
        for (int c = 1; c <= n && static_cast<int>(chosen.size()) < k * ell; ++c)
            if (!marked[c]) chosen.push_back(c);
        if (static_cast<int>(chosen.size()) < k * ell) return inconclusive();
        VertexSet targets;
        for (int c : chosen) targets.push_back(m.cell(1, c).front());
        targets = sorted_unique(std::move(targets));

        auto res = linkage_or_separation(rg, targets, k, ell);
        if (res.separation) {
            Separation sep = *res.separation;
            auto restricted = restrict_grid_model(host, m, sep.separator());
            VertexSet image = restricted.eta.image_vertices();
            VertexSet b_only = set_minus(sep.b_vertices, sep.a_vertices);
            if (set_minus(image, b_only).size() != 0) {
                if (permissive) return inconclusive();
                throw std::logic_error("restricted model escapes B - V(A)");
            }
            out.separation = RootedGridOutcome::SeparationBranch{std::move(sep), std::move(restricted)};
            return out;
        }

        // Shorten paths until every visited column is previously marked or a
        // terminal column of the current linkage.
        auto paths = res.linkage->paths;
        std::vector<int> term_col(paths.size());
        for (size_t i = 0; i < paths.size(); ++i) term_col[i] = column_of[paths[i].back()];
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t i = 0; i < paths.size(); ++i) {
                for (size_t j = 0; j + 1 < paths[i].size(); ++j) {
                    int c = column_of[paths[i][j]];
                    if (c < 0 || marked[c]) continue;
                    bool clash = false;
                    for (size_t o = 0; o < paths.size(); ++o)
                        if (o != i && term_col[o] == c) clash = true;
                    if (clash) continue;
                    paths[i].resize(j + 1);
                    term_col[i] = c;
                    changed = true;
                    break;
                }
            }
        }
        for (int c : term_col) marked[c] = 1;
    }

    // A window of g consecutive unmarked columns strictly after column k*ell.
    int p = -1;
    for (int cand = k * ell; cand + g <= n; ++cand) {
        bool ok = true;
        for (int i = 1; i <= g && ok; ++i)
            if (marked[cand + i]) ok = false;
        if (ok) {
            p = cand;
            break;
        }
    }
    if (p < 0) {
        if (permissive) return inconclusive();
        throw std::logic_error("no unmarked column window found");
    }

    // Delete the window's lower part except column p+1's contraction rows,
    // contract those branch sets, and link Z to the contracted vertices.
    int kl = k * ell;
    VertexSet deleted, contract_src;
    std::vector<VertexSet> contract_cells(kl);
    for (int i = kl + 1; i <= n; ++i)
        for (int j = 1; j <= g; ++j) deleted = set_union(deleted, m.cell(i, p + j));
    for (int i = kl + 1; i <= 2 * kl; ++i) {
        contract_cells[i - kl - 1] = m.cell(i, p + 1);
        contract_src = set_union(contract_src, m.cell(i, p + 1));
    }

    std::vector<int> to_new(host.num_vertices(), -1);
    std::vector<int> keep;
    for (int v = 0; v < host.num_vertices(); ++v)
        if (!set_contains(deleted, v)) {
            to_new[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    int n_keep = static_cast<int>(keep.size());
    for (int i = 0; i < kl; ++i)
        for (int v : contract_cells[i]) to_new[v] = n_keep + i;

    std::vector<Edge> edges;
    for (auto [u, v] : host.edges()) {
        int nu = to_new[u], nv = to_new[v];
        if (nu < 0 || nv < 0 || nu == nv) continue;
        edges.push_back(make_edge(nu, nv));
    }
    RootedGraph contracted;
    contracted.graph = Graph(n_keep + kl, edges);
    for (const auto& zs : rg.z) {
        VertexSet nz;
        for (int v : zs)
            if (to_new[v] >= 0 && to_new[v] < n_keep) nz.push_back(to_new[v]);
        contracted.z.push_back(sorted_unique(std::move(nz)));
    }
    VertexSet w_set;
    for (int i = 0; i < kl; ++i) w_set.push_back(n_keep + i);

    auto final_link = linkage_or_separation(contracted, w_set, k, ell);
    if (!final_link.linkage) {
        if (permissive) return inconclusive();
        throw std::logic_error("expected a linkage to the contracted window");
    }

    // Transposed final model: cell (i,j) of the output is eta(v_{kl+j, p+i}),
    // so the contracted column p+1 becomes the output's first row.
    RootedGridModel rgm;
    rgm.grid.rows = rgm.grid.cols = g;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            rgm.grid.eta.branch_sets[rgm.grid.cell_id(i, j)] = m.cell(kl + j, p + i);

    rgm.roots.assign(kl, -1);
    std::vector<int> path_to_col(final_link.linkage->paths.size(), -1);
    for (size_t pi = 0; pi < final_link.linkage->paths.size(); ++pi) {
        const auto& path = final_link.linkage->paths[pi];
        int c = path.back() - n_keep + 1;  // output column for this root
        path_to_col[pi] = c;
        VertexSet& bs = rgm.grid.eta.branch_sets[rgm.grid.cell_id(1, c)];
        for (size_t j = 0; j + 1 < path.size(); ++j) bs = set_union(bs, {keep[path[j]]});
        rgm.roots[c - 1] = keep[path.front()];
    }
    rgm.partition.k = k;
    for (size_t ci = 0; ci < final_link.linkage->partition.classes.size(); ++ci) {
        std::vector<int> cls;
        for (int idx : final_link.linkage->partition.classes[ci]) cls.push_back(path_to_col[idx] - 1);
        std::sort(cls.begin(), cls.end());
        rgm.partition.classes.push_back(cls);
        rgm.partition.gamma.push_back(final_link.linkage->partition.gamma[ci]);
    }
    wire_pattern_edges(host, Graph::grid(g, g), rgm.grid.eta);
    if (!validate_rooted_grid_model(rg, k, ell, rgm, &why))
        throw std::logic_error("constructed rooted grid model invalid: " + why);
    out.model = std::move(rgm);
    return out;
}

Graph grid_copies_pattern(int copies, int h) {
    std::vector<Graph> parts(copies, Graph::grid(h, h));
    return disjoint_union(parts).graph;
}

std::vector<GridWitness> models_from_rooted_grid(const RootedGraph& rg, const RootedGridModel& m,
                                                 int k, int ell, int h, GridExtract variant) {
    int kl = k * ell;
    int need = kl * (h + 2) + 1;
    if (m.grid.rows < need) throw std::invalid_argument("rooted grid model order too small");
    if (variant == GridExtract::REDUCED && ell < 2)
        throw std::invalid_argument("reduced variant needs ell >= 2");
    std::string why;
    if (!validate_rooted_grid_model(rg, k, ell, m, &why))
        throw std::invalid_argument("invalid rooted grid model: " + why);

    auto refined = refine_partition(m.roots, rg.z, k, ell, m.partition);
    if (!validate_refined(m.roots, rg.z, k, ell, refined, &why))
        throw std::logic_error("refinement invalid: " + why);

    const Graph& host = rg.graph;
    auto block_col0 = [&](int j1) { return kl + 1 + h * (j1 - 1); };  // leftmost block column

    // Per root index (1-based j1): path cells leading from the root's column
    // to its h x h block, and the block cells.
    auto route_cells = [&](int j1) {
        std::vector<std::pair<int, int>> cells;
        int bend_row = kl + 2 - j1;
        for (int a = 1; a <= bend_row; ++a) cells.push_back({a, j1});
        for (int b2 = j1; b2 <= block_col0(j1); ++b2) cells.push_back({bend_row, b2});
        for (int a = bend_row; a <= kl + 2; ++a) cells.push_back({a, block_col0(j1)});
        return cells;
    };
    auto block_cell = [&](int j1, int r, int c) {  // local 1-based block coords
        return std::pair<int, int>{kl + 1 + r, block_col0(j1) + c - 1};
    };

    auto cell_union = [&](const std::vector<std::pair<int, int>>& cs) {
        VertexSet u;
        for (auto [r, c] : cs) u = set_union(u, m.grid.cell(r, c));
        return u;
    };

    std::vector<GridWitness> out;
    for (int j = 0; j < k; ++j) {
        const auto& cls = refined.index_classes[j];  // 0-based root indices, sorted
        GridWitness wit;
        for (const auto& [idx, pos] : refined.betas[j]) wit.z_hits.push_back(pos);
        std::sort(wit.z_hits.begin(), wit.z_hits.end());

        int copies = (variant == GridExtract::FULL) ? ell : ell - 1;
        Graph pattern = grid_copies_pattern(copies, h);

        // component order: FULL uses all class members ascending; REDUCED
        // keeps the non-anchor members plus the merged anchor component.
        std::vector<int> comp_roots;  // 1-based root index per component
        int merged_into = -1, absorbed = -1;
        if (variant == GridExtract::FULL) {
            for (int i : cls) comp_roots.push_back(i + 1);
        } else {
            auto [aj, bj] = *refined.anchors[j];
            merged_into = aj + 1;
            absorbed = bj + 1;
            for (int i : cls)
                if (i != bj) comp_roots.push_back(i + 1);
        }

        for (int ci = 0; ci < copies; ++ci) {
            int j1 = comp_roots[ci];
            int base = ci * h * h;
            for (int r = 1; r <= h; ++r)
                for (int c = 1; c <= h; ++c) {
                    auto [gr, gc] = block_cell(j1, r, c);
                    wit.model.branch_sets[base + (r - 1) * h + (c - 1)] =
                        m.grid.cell(gr, gc);
                }
            // absorb the route into the block's top-left branch set
            int anchor_vertex = base;  // local (1,1)
            wit.model.branch_sets[anchor_vertex] =
                set_union(wit.model.branch_sets[anchor_vertex], cell_union(route_cells(j1)));

            if (variant == GridExtract::REDUCED && j1 == merged_into) {
                // connecting path below the blocks plus all of the absorbed
                // root's route and block, merged into local (h,1)
                std::vector<std::pair<int, int>> extra;
                int ca = block_col0(merged_into), cb = block_col0(absorbed);
                int low = kl + 1 + h + (j + 1);
                for (int r = kl + 1 + h + 1; r <= low; ++r) extra.push_back({r, ca});
                for (int c = ca; c <= cb; ++c) extra.push_back({low, c});
                for (int r = low - 1; r >= kl + 1 + h; --r) extra.push_back({r, cb});
                auto absorbed_route = route_cells(absorbed);
                extra.insert(extra.end(), absorbed_route.begin(), absorbed_route.end());
                for (int r = 1; r <= h; ++r)
                    for (int c = 1; c <= h; ++c) extra.push_back(block_cell(absorbed, r, c));
                int bottom_left = base + (h - 1) * h;  // local (h,1)
                wit.model.branch_sets[bottom_left] =
                    set_union(wit.model.branch_sets[bottom_left], cell_union(extra));
            }
        }
        wire_pattern_edges(host, pattern, wit.model);
        auto check = validate_model_function(host, pattern, wit.model);
        if (!check.ok) throw std::logic_error("grid witness invalid: " + check.violations.front());
        if (hits_count(wit.model.image_vertices(), rg.z) < ell)
            throw std::logic_error("grid witness misses Z members");
        out.push_back(std::move(wit));
    }

    // pairwise disjointness across witnesses
    VertexSet seen;
    for (const auto& w : out) {
        VertexSet img = w.model.image_vertices();
        if (!set_intersect(seen, img).empty()) throw std::logic_error("witnesses overlap");
        seen = set_union(seen, img);
    }
    return out;
}

}  // namespace ep
