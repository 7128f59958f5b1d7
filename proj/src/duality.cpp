#include "ep/duality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"

namespace ep {

namespace {

void drop_zero_terms(SymbolicBound& b) {
    for (auto it = b.kappa_terms.begin(); it != b.kappa_terms.end();)
        it = (it->second == 0) ? b.kappa_terms.erase(it) : std::next(it);
}

VertexSet all_vertices(const Graph& g) {
    VertexSet v(g.num_vertices());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

Edge find_branch_edge(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int u : a)
        for (int w : g.neighbors(u))
            if (set_contains(b, w)) return make_edge(u, w);
    throw std::logic_error("no host edge between adjacent branch sets");
}

void wire_pattern_edges(const Graph& host, const Graph& pattern, ModelFunction& eta) {
    eta.branch_edges.clear();
    const auto& pe = pattern.edges();
    for (size_t i = 0; i < pe.size(); ++i)
        eta.branch_edges[static_cast<int>(i)] =
            find_branch_edge(host, eta.branch_sets.at(pe[i].first), eta.branch_sets.at(pe[i].second));
}

// Relabel a model function through an id map (-1 entries must not occur).
ModelFunction remap_model(const ModelFunction& eta, const std::vector<int>& idmap) {
    ModelFunction out;
    for (const auto& [pv, bs] : eta.branch_sets) {
        VertexSet m;
        for (int v : bs) {
            if (idmap[v] < 0) throw std::logic_error("model vertex outside the mapped region");
            m.push_back(idmap[v]);
        }
        out.branch_sets[pv] = sorted_unique(std::move(m));
    }
    for (const auto& [i, e] : eta.branch_edges)
        out.branch_edges[i] = make_edge(idmap[e.first], idmap[e.second]);
    return out;
}

GridModel remap_grid(const GridModel& gm, const std::vector<int>& idmap) {
    GridModel out;
    out.rows = gm.rows;
    out.cols = gm.cols;
    out.eta = remap_model(gm.eta, idmap);
    return out;
}

}  // namespace

SymbolicBound& SymbolicBound::operator+=(const SymbolicBound& o) {
    for (const auto& [arg, c] : o.kappa_terms) kappa_terms[arg] += c;
    constant += o.constant;
    drop_zero_terms(*this);
    return *this;
}

long long SymbolicBound::evaluate(const std::function<long long(long long)>& kappa) const {
    long long total = constant;
    for (const auto& [arg, c] : kappa_terms) total += c * kappa(arg);
    return total;
}

SymbolicBound operator+(SymbolicBound a, const SymbolicBound& b) {
    a += b;
    return a;
}

SymbolicBound operator*(long long c, SymbolicBound b) {
    for (auto& [arg, coef] : b.kappa_terms) coef *= c;
    b.constant *= c;
    drop_zero_terms(b);
    return b;
}

long long x_threshold(int k, int ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("thresholds need positive k and ell");
    return static_cast<long long>(k) * ell * ell;
}

long long g_threshold(int k, int ell, int h) {
    if (h < 1) throw std::invalid_argument("pattern must be non-empty");
    long long x = x_threshold(k, ell);
    return 2 * (4 * x * x + 14LL * h * x + 3 * x + 1) * (4 * x * x + 1) + x;
}

SymbolicBound f1_bound(int k, int ell, int h) {
    if (k < 1 || ell < 1 || h < 1) throw std::invalid_argument("bounds need positive arguments");
    long long hfac = static_cast<long long>(h) * h - h + 1;
    SymbolicBound b;
    b.kappa_terms[g_threshold(k, ell, h)] += hfac * (k - 1);
    if (ell >= 2) {
        b += (ell - 1) * f1_bound(k, ell - 1, h);
        b.constant += x_threshold(k, ell);
    }
    drop_zero_terms(b);
    return b;
}

SymbolicBound f_bound(int k, int ell, int h) {
    SymbolicBound b = static_cast<long long>(ell) * f1_bound(k, ell, h);
    b.constant += x_threshold(k, ell);
    return b;
}

int EngineConfig::effective_block(int h) const {
    if (!use_paper_constants && block_order > 0) return block_order;
    return 14 * h;
}

int EngineConfig::effective_target(int k, int ell, int h) const {
    int need = k * ell * (effective_block(h) + 2) + 1;
    if (!use_paper_constants && grid_target_order > need) return grid_target_order;
    return need;
}

SeparateOutcome separate_or_models(const RootedGraph& rg, const GridModel& m, int k, int h,
                                   int ell, const EngineConfig& cfg) {
    validate_rooted(rg);
    if (k < 1 || ell < 1 || h < 1) throw std::invalid_argument("need positive k, h, ell");
    std::string why;
    if (!validate_grid_model(rg.graph, m, &why))
        throw std::invalid_argument("bad grid model: " + why);
    if (m.rows != m.cols) throw std::invalid_argument("need a square grid model");

    int block = cfg.effective_block(h);
    int target = cfg.effective_target(k, ell, h);
    long long x = x_threshold(k, ell);
    long long paper_target = static_cast<long long>(k) * ell * (14LL * h + 2) + 1;
    if (!cfg.permissive) {
        long long need = 2 * paper_target * (static_cast<long long>(k) * k * ell * ell + 1);
        if (m.order() < need) throw std::invalid_argument("grid model order below bound");
    }

    GridExtract variant = (ell >= 2) ? GridExtract::REDUCED : GridExtract::FULL;

    SeparateOutcome out;
    auto inconclusive = [&]() {
        out.inconclusive = true;
        return out;
    };

    // Current separation (A,B) and a grid model living inside B - V(A).
    Separation cur;
    cur.b_vertices = all_vertices(rg.graph);
    cur.b_edges = rg.graph.edges();
    GridModel gm = m;
    bool have_initial = multiset_size(rg.z) <= ell - 1;

    if (!have_initial) {
        auto first = rooted_grid_or_separation(rg, m, target, k, ell, cfg.permissive);
        if (first.inconclusive) return inconclusive();
        if (first.model) {
            out.models = models_from_rooted_grid(rg, *first.model, k, ell, block, variant);
            return out;
        }
        cur = first.separation->sep;
        gm = first.separation->restricted;
    }

    // Iteratively tighten the separation until the far side either carries a
    // rooted grid model over the surviving Z members or loses them all.
    for (int guard = 0; guard <= ell; ++guard) {
        VertexSet b_only = set_minus(cur.b_vertices, cur.a_vertices);
        ZFamily y = restrict_multiset(rg.z, b_only);
        int lcur = multiset_size(y);
        if (lcur >= ell) throw std::logic_error("separation left ell or more members uncovered");

        if (lcur == 0) {
            RootedGridModel trivial;
            trivial.grid = gm;
            trivial.partition.k = k;
            out.separation = SeparateOutcome::SeparationBranch{cur, 0, gm, std::move(trivial)};
            break;
        }

        auto ind = induced_subgraph(rg.graph, b_only);
        RootedGraph sub;
        sub.graph = ind.graph;
        for (const auto& zi : y) {
            VertexSet zz;
            for (int v : zi) zz.push_back(ind.from_orig[v]);
            sub.z.push_back(sorted_unique(std::move(zz)));
        }
        GridModel gm_sub = remap_grid(gm, ind.from_orig);

        auto res = rooted_grid_or_separation(sub, gm_sub, target, k, lcur, cfg.permissive);
        if (res.inconclusive) return inconclusive();
        if (res.model) {
            RootedGridModel back;
            back.grid = remap_grid(res.model->grid, ind.to_orig);
            for (int r : res.model->roots) back.roots.push_back(ind.to_orig[r]);
            back.partition = res.model->partition;
            RootedGraph scoped{rg.graph, y};
            if (!validate_rooted_grid_model(scoped, k, lcur, back, &why))
                throw std::logic_error("mapped rooted grid model invalid: " + why);
            out.separation = SeparateOutcome::SeparationBranch{cur, lcur, gm, std::move(back)};
            break;
        }

        // Merge the inner separation (C,D) of B - V(A) into (A,B):
        // A' = A + C, B' = D + (A cap B).
        VertexSet c_orig, d_orig;
        for (int v : res.separation->sep.a_vertices) c_orig.push_back(ind.to_orig[v]);
        for (int v : res.separation->sep.b_vertices) d_orig.push_back(ind.to_orig[v]);
        c_orig = sorted_unique(std::move(c_orig));
        d_orig = sorted_unique(std::move(d_orig));

        Separation next;
        next.a_vertices = set_union(cur.a_vertices, c_orig);
        next.b_vertices = set_union(d_orig, cur.separator());
        VertexSet mid = set_intersect(next.a_vertices, next.b_vertices);
        for (auto e : rg.graph.edges()) {
            bool in_a = set_contains(next.a_vertices, e.first) &&
                        set_contains(next.a_vertices, e.second);
            bool in_mid = set_contains(mid, e.first) && set_contains(mid, e.second);
            if (in_a && !in_mid)
                next.a_edges.push_back(e);
            else
                next.b_edges.push_back(e);
        }
        auto chk = validate_separation(rg.graph, next);
        if (!chk.ok) throw std::logic_error("merged separation invalid: " + chk.violations.front());
        cur = std::move(next);
        gm = remap_grid(res.separation->restricted, ind.to_orig);
    }

    if (!out.separation) throw std::logic_error("separation refinement did not terminate");
    if (out.separation->sep.order() >= x)
        throw std::logic_error("refined separation order reached k*ell^2");
    return out;
}

VertexSet reduce_across_separation(const RootedGraph& rg, const Separation& sep, int ell,
                                   int ell_prime, const VertexSet& t) {
    auto chk = validate_separation(rg.graph, sep);
    if (!chk.ok) throw std::invalid_argument("invalid separation: " + chk.violations.front());
    if (ell_prime < 1 || ell_prime >= ell)
        throw std::invalid_argument("need 1 <= ell' < ell");
    if (missing_positions(rg.z, sep.a_vertices) != ell_prime)
        throw std::invalid_argument("||Z minus A|| does not match ell'");
    VertexSet a_only = set_minus(sep.a_vertices, sep.b_vertices);
    if (!set_minus(t, a_only).empty())
        throw std::invalid_argument("deletion set must live inside A - V(B)");
    return set_union(t, sep.separator());
}

int irrelevant_vertex_candidate(const RootedGraph& rg, const Separation& sep,
                                const std::optional<RootedGridModel>& m, IrrelevantMode mode) {
    auto chk = validate_separation(rg.graph, sep);
    if (!chk.ok) throw std::invalid_argument("invalid separation: " + chk.violations.front());
    int missing = missing_positions(rg.z, sep.a_vertices);
    if (mode == IrrelevantMode::Z_EMPTY && missing != 0)
        throw std::invalid_argument("mode requires all Z members inside V(A)");
    if (mode == IrrelevantMode::Z_ONE && missing != 1)
        throw std::invalid_argument("mode requires exactly one Z member leaving V(A)");
    VertexSet b_only = set_minus(sep.b_vertices, sep.a_vertices);
    if (b_only.empty()) throw std::invalid_argument("B - V(A) is empty");
    if (sep.order() == 0) return b_only.front();
    if (!m) throw std::invalid_argument("nonzero separation order needs a rooted grid model");
    const VertexSet& corner = m->grid.cell(m->grid.rows, m->grid.cols);
    if (!set_minus(corner, b_only).empty())
        throw std::invalid_argument("corner branch set leaves B - V(A)");
    return corner.front();
}

namespace {

using nlohmann::json;

// Models the listed pattern components inside `allowed`, the i-th one forced
// to meet the paired Z position (-1: unconstrained). Returns branch sets
// keyed by original pattern vertex ids and edges keyed into h's edge list;
// shrinks `allowed` by the used image.
std::optional<ModelFunction> model_components_within(
    const Graph& g, const ZFamily& z, const Graph& h, const std::vector<VertexSet>& comps,
    const std::vector<std::pair<int, int>>& tasks, VertexSet& allowed, Budget& budget) {
    ModelFunction combined;
    for (auto [ci, pos] : tasks) {
        auto sub = induced_subgraph(h, comps[ci]);
        RootedGraph scoped;
        scoped.graph = g;
        int need = 0;
        if (pos >= 0) {
            scoped.z = {z[pos]};
            need = 1;
        }
        auto eta = find_hzl_model(scoped, sub.graph, need, budget, allowed);
        if (!eta) return std::nullopt;
        for (const auto& [sv, bs] : eta->branch_sets) {
            combined.branch_sets[sub.to_orig[sv]] = bs;
            allowed = set_minus(allowed, bs);
        }
        const auto& he = h.edges();
        for (size_t i = 0; i < sub.graph.edges().size(); ++i) {
            auto [su, sv] = sub.graph.edges()[i];
            Edge orig = make_edge(sub.to_orig[su], sub.to_orig[sv]);
            auto at = std::lower_bound(he.begin(), he.end(), orig) - he.begin();
            combined.branch_edges[static_cast<int>(at)] = eta->branch_edges.at(static_cast<int>(i));
        }
    }
    return combined;
}

}  // namespace

PipelineResult ep_pipeline(const RootedGraph& rg, const Graph& h, int ell, int k,
                           const EngineConfig& cfg, bool pure, const PipelineInput& input) {
    validate_rooted(rg);
    if (h.num_vertices() == 0) throw std::invalid_argument("pattern must be non-empty");
    if (ell < 1 || k < 1) throw std::invalid_argument("need positive k and ell");
    auto comps = connected_components(h);
    int cc = static_cast<int>(comps.size());
    if (cc < ell - 1) throw std::invalid_argument("pattern needs at least ell-1 components");

    PipelineResult res;
    res.stated_bound = f_bound(k, ell, h.num_vertices());
    res.report.k = k;
    Budget budget{cfg.budget};
    std::function<long long(long long)> kappa =
        cfg.kappa ? cfg.kappa : [](long long v) { return v; };
    long long stated = res.stated_bound.evaluate(kappa);
    auto tr = [&](json j) { res.trace.push_back(j.dump()); };
    tr({{"branch", "start"},
        {"k", k},
        {"ell", ell},
        {"pure", pure},
        {"stated_bound", stated}});

    VertexSet everything = all_vertices(rg.graph);
    auto alive = [&](const VertexSet& within) {
        if (within.empty()) return false;
        return pure ? has_pure_model(rg, h, ell, budget, within)
                    : has_hzl_model(rg, h, ell, budget, within);
    };
    auto finish_deletion = [&](VertexSet s, const std::string& how) {
        if (alive(set_minus(everything, s))) {
            tr({{"branch", how}, {"certified", false}});
            return false;
        }
        res.report.status = Status::ok;
        res.report.deletion_set = std::move(s);
        res.report.note = how + " deletion set (certified)";
        tr({{"branch", how}, {"certified", true}, {"size", res.report.deletion_set->size()}});
        return true;
    };
    auto oracle = [&](const std::string& reason) {
        tr({{"branch", "oracle"}, {"reason", reason}});
        res.report =
            check_duality(rg, h, ell, k, [stated](int) { return stated; }, pure, budget);
    };

    try {
        if (input.td) {
            auto r = bounded_tw_pack_or_hit(rg, h, ell, k, *input.td, pure, budget);
            tr({{"branch", "bounded-treewidth"},
                {"width", input.td->width()},
                {"safe_bound", r.safe_bound}});
            if (!r.packing.empty() || !r.pure_packing.empty()) {
                res.report.status = Status::ok;
                res.report.packing = std::move(r.packing);
                res.report.pure_packing = std::move(r.pure_packing);
                res.report.note = "bounded-treewidth packing";
            } else {
                res.report.status = Status::ok;
                res.report.deletion_set = std::move(r.deletion_set);
                res.report.note = "bounded-treewidth deletion set (certified)";
            }
            return res;
        }

        if (!input.grid) {
            oracle("no structural input");
            return res;
        }

        auto so = separate_or_models(rg, *input.grid, k, h.num_vertices(), ell, cfg);
        if (so.inconclusive) {
            oracle("grid refinement inconclusive");
            return res;
        }

        if (so.models) {
            tr({{"branch", "grid-models"}, {"count", so.models->size()}});
            std::vector<ModelFunction> packing;
            std::vector<PureModelWitness> purep;
            bool realized = true;
            for (const auto& w : *so.models) {
                VertexSet img = w.model.image_vertices();
                if (pure) {
                    auto pm = find_pure_model(rg, h, ell, budget, img);
                    if (!pm) { realized = false; break; }
                    purep.push_back(std::move(*pm));
                } else {
                    auto mm = find_hzl_model(rg, h, ell, budget, img);
                    if (!mm) { realized = false; break; }
                    packing.push_back(std::move(*mm));
                }
            }
            if (realized) {
                res.report.status = Status::ok;
                res.report.nu = k;
                res.report.packing = std::move(packing);
                res.report.pure_packing = std::move(purep);
                res.report.note = "packing realized inside disjoint grid witnesses";
                return res;
            }
            oracle("pattern not realizable inside grid witnesses");
            return res;
        }

        const auto& sb = *so.separation;
        int lp = sb.ell_prime;
        tr({{"branch", "separation"}, {"order", sb.sep.order()}, {"ell_prime", lp}});

        VertexSet a_only = set_minus(sb.sep.a_vertices, sb.sep.b_vertices);
        VertexSet b_only = set_minus(sb.sep.b_vertices, sb.sep.a_vertices);
        auto ind = induced_subgraph(rg.graph, a_only);
        // Z members fully inside V(A), restricted to A - V(B); positions kept.
        RootedGraph subrg;
        subrg.graph = ind.graph;
        for (const auto& zi : rg.z) {
            VertexSet zz;
            if (set_minus(zi, sb.sep.a_vertices).empty())
                for (int v : zi)
                    if (ind.from_orig[v] >= 0) zz.push_back(ind.from_orig[v]);
            subrg.z.push_back(sorted_unique(std::move(zz)));
        }
        int sub_ell = ell - lp;

        // Positions of Z members leaving V(A) (each to be met on the far side).
        std::vector<int> far_positions;
        for (size_t i = 0; i < rg.z.size(); ++i)
            if (!set_minus(rg.z[i], sb.sep.a_vertices).empty())
                far_positions.push_back(static_cast<int>(i));

        // Completes k pure sub-witnesses (A - V(B) side, original ids) into k
        // disjoint top-level witnesses using components modeled in B - V(A).
        auto complete_packing = [&](const std::vector<PureModelWitness>& subws) {
            VertexSet room = b_only;
            std::vector<ModelFunction> packing;
            std::vector<PureModelWitness> purep;
            for (const auto& w : subws) {
                std::vector<int> unused;
                for (int ci = 0; ci < cc; ++ci)
                    if (std::find(w.component_indices.begin(), w.component_indices.end(), ci) ==
                        w.component_indices.end())
                        unused.push_back(ci);
                std::vector<std::pair<int, int>> tasks;
                size_t next = 0;
                for (int pos : far_positions) {
                    if (next >= unused.size()) return false;
                    tasks.push_back({unused[next++], pos});
                }
                if (!pure)  // ordinary models need every remaining component too
                    for (; next < unused.size(); ++next) tasks.push_back({unused[next], -1});
                auto extra = model_components_within(rg.graph, rg.z, h, comps, tasks, room, budget);
                if (!extra) return false;
                if (pure) {
                    PureModelWitness full = w;
                    for (auto [ci, pos] : tasks) {
                        full.component_indices.push_back(ci);
                        full.alpha[ci] = {pos};
                    }
                    std::sort(full.component_indices.begin(), full.component_indices.end());
                    for (const auto& [pv, bs] : extra->branch_sets) full.model.branch_sets[pv] = bs;
                    for (const auto& [i, e] : extra->branch_edges) full.model.branch_edges[i] = e;
                    if (!validate_pure_witness(rg, h, ell, full).ok) return false;
                    purep.push_back(std::move(full));
                } else {
                    ModelFunction full = w.model;
                    for (const auto& [pv, bs] : extra->branch_sets) full.branch_sets[pv] = bs;
                    for (const auto& [i, e] : extra->branch_edges) full.branch_edges[i] = e;
                    if (!validate_model_function(rg.graph, h, full).ok) return false;
                    if (hits_count(full.image_vertices(), rg.z) < ell) return false;
                    packing.push_back(std::move(full));
                }
            }
            res.report.status = Status::ok;
            res.report.nu = k;
            res.report.packing = std::move(packing);
            res.report.pure_packing = std::move(purep);
            res.report.note = "packing completed across the separation";
            tr({{"branch", "completion"}, {"count", k}});
            return true;
        };

        auto lift_witness = [&](const PureModelWitness& w) {
            PureModelWitness out = w;
            out.model = remap_model(w.model, ind.to_orig);
            return out;
        };

        if (cc == ell - 1 && lp == 1 && ell >= 3) {
            // Iterate over every pattern subgraph dropping one component; the
            // union of the per-subgraph deletion sets covers the near side.
            VertexSet t;
            for (int drop = 0; drop < cc; ++drop) {
                VertexSet hverts;
                for (int ci = 0; ci < cc; ++ci)
                    if (ci != drop) hverts = set_union(hverts, comps[ci]);
                auto hsub = induced_subgraph(h, hverts);
                auto pk = packing_number(subrg, hsub.graph, ell - 1, /*pure=*/true, budget);
                tr({{"branch", "subpattern"}, {"drop", drop}, {"nu", pk.nu}});
                if (pk.nu >= k) {
                    std::vector<PureModelWitness> lifted;
                    for (int i = 0; i < k; ++i) {
                        PureModelWitness w = pk.pure_witnesses[i];
                        // witness ids refer to hsub; map back to h's components
                        PureModelWitness orig;
                        VertexSet used_hverts;
                        for (const auto& [sv, bs] : w.model.branch_sets) {
                            orig.model.branch_sets[hsub.to_orig[sv]] = bs;
                            used_hverts.push_back(hsub.to_orig[sv]);
                        }
                        const auto& he = h.edges();
                        for (size_t i2 = 0; i2 < hsub.graph.edges().size(); ++i2) {
                            auto it = w.model.branch_edges.find(static_cast<int>(i2));
                            if (it == w.model.branch_edges.end()) continue;
                            auto [su, sv] = hsub.graph.edges()[i2];
                            Edge oe = make_edge(hsub.to_orig[su], hsub.to_orig[sv]);
                            auto at = std::lower_bound(he.begin(), he.end(), oe) - he.begin();
                            orig.model.branch_edges[static_cast<int>(at)] = it->second;
                        }
                        // component indices/alpha relative to h
                        used_hverts = sorted_unique(std::move(used_hverts));
                        for (int ci = 0; ci < cc; ++ci)
                            if (!set_intersect(comps[ci], used_hverts).empty())
                                orig.component_indices.push_back(ci);
                        auto subcomps = connected_components(hsub.graph);
                        for (const auto& [sci, ps] : w.alpha) {
                            int ov = hsub.to_orig[subcomps[sci].front()];
                            for (int ci = 0; ci < cc; ++ci)
                                if (set_contains(comps[ci], ov)) orig.alpha[ci] = ps;
                        }
                        lifted.push_back(lift_witness(orig));
                    }
                    if (complete_packing(lifted)) return res;
                    oracle("sub-pattern packing not completable");
                    return res;
                }
                auto cov = covering_number(subrg, hsub.graph, ell - 1, /*pure=*/true, budget);
                VertexSet mapped;
                for (int v : cov.deletion_set) mapped.push_back(ind.to_orig[v]);
                t = set_union(t, sorted_unique(std::move(mapped)));
            }
            auto s = reduce_across_separation(rg, sb.sep, ell, lp, t);
            if (finish_deletion(std::move(s), "sub-pattern union")) return res;
            oracle("sub-pattern union uncertified");
            return res;
        }

        auto pk = packing_number(subrg, h, sub_ell, /*pure=*/true, budget);
        tr({{"branch", "near-side"}, {"nu", pk.nu}, {"sub_ell", sub_ell}});
        if (pk.nu >= k) {
            std::vector<PureModelWitness> lifted;
            for (int i = 0; i < k; ++i) lifted.push_back(lift_witness(pk.pure_witnesses[i]));
            if (lp == 0 && pure) {
                // with no Z member leaving V(A), near-side pure witnesses are
                // already witnesses of the whole graph
                res.report.status = Status::ok;
                res.report.nu = k;
                res.report.pure_packing = std::move(lifted);
                res.report.note = "near-side pure packing";
                return res;
            }
            if (complete_packing(lifted)) return res;
            oracle("near-side packing not completable");
            return res;
        }
        auto cov = covering_number(subrg, h, sub_ell, /*pure=*/true, budget);
        VertexSet t;
        for (int v : cov.deletion_set) t.push_back(ind.to_orig[v]);
        t = sorted_unique(std::move(t));
        VertexSet s = (lp == 0) ? set_union(t, sb.sep.separator())
                                : reduce_across_separation(rg, sb.sep, ell, lp, t);
        if (finish_deletion(std::move(s), lp == 0 ? "near-side cover" : "reduced cover")) return res;
        oracle("reduced deletion set uncertified");
        return res;
    } catch (const BudgetExceeded&) {
        res.report.status = Status::undecided;
        res.report.note = "budget exceeded";
        tr({{"branch", "undecided"}, {"reason", "budget exceeded"}});
        return res;
    }
}

}  // namespace ep
