#include <iostream>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "ep/json_io.hpp"

using namespace ep;

namespace {

Json read_stdin_json() {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return Json::parse(buf.str());
}

Graph parse_pattern(const std::string& spec) {
    if (!spec.empty() && spec.front() == '{') return pattern_from_json(Json::parse(spec));
    if (auto p = pattern_preset(spec)) return *p;
    throw std::invalid_argument("unknown pattern: " + spec);
}

GridModel identity_grid_model(const Graph& g) {
    auto [rows, cols] = g.grid_dims();
    GridModel m;
    m.rows = rows;
    m.cols = cols;
    for (int v = 0; v < g.num_vertices(); ++v) m.eta.branch_sets[v] = {v};
    const auto& es = g.edges();
    for (size_t i = 0; i < es.size(); ++i) m.eta.branch_edges[static_cast<int>(i)] = es[i];
    return m;
}

VertexSet parse_vertex_list(const std::string& s) {
    VertexSet out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return sorted_unique(std::move(out));
}

// The pattern option is spelled --h, so the help flag must not claim -h.
void long_help_only(CLI::App* a) {
    a->set_help_flag("--help", "print help");
    for (auto* sub : a->get_subcommands({})) long_help_only(sub);
}

int status_exit(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::violation: return 2;
        default: return 3;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rooted minor-model packing/covering toolkit"};
    app.require_subcommand(1);

    std::string pattern = "K1", y_list, td_file, bound = "paper";
    int ell = 1, k = 1, gen_n = 3, gen_g = 3, gen_h = 3, target_g = 1, x = 0;
    long long budget_cap = 10'000'000;
    unsigned seed = 0;
    bool pure = false, permissive = false, use_identity_grid = false;
    app.add_option("--budget", budget_cap, "search budget cap")->capture_default_str();
    app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();

    std::function<int()> action;

    auto* gen = app.add_subcommand("gen", "emit an instance as canonical JSON");
    gen->set_help_flag("--help", "print help");
    auto* gen_grid = gen->add_subcommand("grid", "g x h grid, empty Z");
    gen_grid->set_help_flag("--help", "print help");
    gen_grid->add_option("--g", gen_g)->required();
    gen_grid->add_option("--h", gen_h)->required();
    gen_grid->callback([&] {
        action = [&] {
            RootedGraph rg;
            rg.graph = Graph::grid(gen_g, gen_h);
            std::cout << canonical_dump(instance_to_json(rg)) << "\n";
            return 0;
        };
    });
    auto* gen_fig = gen->add_subcommand("figure1", "n x n grid with three boundary Z members");
    gen_fig->set_help_flag("--help", "print help");
    gen_fig->add_option("--n", gen_n)->required();
    gen_fig->callback([&] {
        action = [&] {
            std::cout << canonical_dump(instance_to_json(figure1_instance(gen_n))) << "\n";
            return 0;
        };
    });
    auto* gen_neg = gen->add_subcommand("negative", "family without the packing/covering duality");
    gen_neg->set_help_flag("--help", "print help");
    gen_neg->add_option("--h", pattern)->required();
    gen_neg->add_option("--l", ell)->required();
    gen_neg->add_option("--n", gen_n)->required();
    gen_neg->add_option("--x", x);
    gen_neg->callback([&] {
        action = [&] {
            auto h = parse_pattern(pattern);
            auto inst = negative_family(h, ell, gen_n);
            Json prov;
            prov["t"] = inst.t;
            prov["ell"] = inst.ell;
            prov["n"] = inst.n;
            prov["x"] = x;
            prov["offsets"] = inst.component_offsets;
            prov["orders"] = inst.component_orders;
            std::cout << canonical_dump(instance_to_json(inst.rg, prov)) << "\n";
            return 0;
        };
    });

    auto* find = app.add_subcommand("find", "search for a structure in a stdin instance");
    find->set_help_flag("--help", "print help");
    auto* find_model = find->add_subcommand("model", "minor model meeting l members of Z");
    find_model->set_help_flag("--help", "print help");
    find_model->add_option("--h", pattern)->required();
    find_model->add_option("--l", ell)->required();
    find_model->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            Budget b{budget_cap};
            auto m = find_hzl_model(rg, parse_pattern(pattern), ell, b);
            Json out;
            out["found"] = m.has_value();
            if (m) out["model"] = model_to_json(*m);
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });
    auto* find_pure = find->add_subcommand("pure", "pure witness over pattern components");
    find_pure->set_help_flag("--help", "print help");
    find_pure->add_option("--h", pattern)->required();
    find_pure->add_option("--l", ell)->required();
    find_pure->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            Budget b{budget_cap};
            auto w = find_pure_model(rg, parse_pattern(pattern), ell, b);
            Json out;
            out["found"] = w.has_value();
            if (w) out["witness"] = pure_witness_to_json(*w);
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });
    auto* find_link = find->add_subcommand("linkage", "Z-to-Y linkage or separation");
    find_link->set_help_flag("--help", "print help");
    find_link->add_option("--k", k)->required();
    find_link->add_option("--l", ell)->required();
    find_link->add_option("--y", y_list, "comma-separated target vertices")->required();
    find_link->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            auto r = linkage_or_separation(rg, parse_vertex_list(y_list), k, ell);
            Json out;
            if (r.linkage) out["linkage"] = linkage_to_json(*r.linkage);
            if (r.separation) out["separation"] = separation_to_json(*r.separation);
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });
    auto* find_rgm = find->add_subcommand("rooted-grid", "rooted grid model or separation");
    find_rgm->set_help_flag("--help", "print help");
    find_rgm->add_option("--k", k)->required();
    find_rgm->add_option("--l", ell)->required();
    find_rgm->add_option("--g", target_g, "target order")->required();
    find_rgm->add_flag("--permissive", permissive);
    find_rgm->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            if (!rg.graph.is_grid())
                throw std::invalid_argument("instance must carry grid dimensions");
            auto out = rooted_grid_or_separation(rg, identity_grid_model(rg.graph), target_g, k,
                                                 ell, permissive);
            Json j;
            if (out.model) j["model"] = rooted_grid_model_to_json(*out.model);
            if (out.separation) {
                j["separation"] = separation_to_json(out.separation->sep);
                j["restricted"] = grid_model_to_json(out.separation->restricted);
            }
            j["inconclusive"] = out.inconclusive;
            std::cout << canonical_dump(j) << "\n";
            return out.inconclusive ? 3 : 0;
        };
    });

    auto* pack = app.add_subcommand("pack", "exact maximum disjoint packing");
    pack->set_help_flag("--help", "print help");
    pack->add_option("--h", pattern)->required();
    pack->add_option("--l", ell)->required();
    pack->add_flag("--pure", pure);
    pack->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            Budget b{budget_cap};
            auto r = packing_number(rg, parse_pattern(pattern), ell, pure, b);
            Json out;
            out["nu"] = r.nu;
            out["witnesses"] = Json::array();
            for (const auto& m : r.witnesses) out["witnesses"].push_back(model_to_json(m));
            for (const auto& w : r.pure_witnesses)
                out["witnesses"].push_back(pure_witness_to_json(w));
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });

    auto* cover = app.add_subcommand("cover", "exact minimum deletion set");
    cover->set_help_flag("--help", "print help");
    cover->add_option("--h", pattern)->required();
    cover->add_option("--l", ell)->required();
    cover->add_flag("--pure", pure);
    cover->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            Budget b{budget_cap};
            auto r = covering_number(rg, parse_pattern(pattern), ell, pure, b);
            Json out;
            out["tau"] = r.tau;
            out["deletion_set"] = r.deletion_set;
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });

    auto* dc = app.add_subcommand("duality-check", "assert nu >= k or tau <= bound(k)");
    dc->set_help_flag("--help", "print help");
    dc->add_option("--h", pattern)->required();
    dc->add_option("--l", ell)->required();
    dc->add_option("--k", k)->required();
    dc->add_option("--bound", bound, "mader | paper | integer")->capture_default_str();
    dc->add_flag("--pure", pure);
    dc->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            auto h = parse_pattern(pattern);
            Budget b{budget_cap};
            std::function<long long(int)> bf;
            if (bound == "mader")
                bf = [](int kk) { return 2LL * kk - 2; };
            else if (bound == "paper") {
                long long v = f_bound(k, ell, h.num_vertices()).evaluate([](long long a) { return a; });
                bf = [v](int) { return v; };
            } else {
                long long c = std::stoll(bound);
                bf = [c](int) { return c; };
            }
            auto rep = check_duality(rg, h, ell, k, bf, pure, b);
            std::cout << canonical_dump(duality_report_to_json(rep)) << "\n";
            return status_exit(rep.status);
        };
    });

    auto* td = app.add_subcommand("td", "tree decomposition operations");
    td->set_help_flag("--help", "print help");
    auto* tdv = td->add_subcommand("validate", "check the decomposition axioms");
    tdv->set_help_flag("--help", "print help");
    tdv->add_option("--td", td_file, "decomposition JSON file")->required();
    tdv->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            std::ifstream in(td_file);
            if (!in) throw std::invalid_argument("cannot open " + td_file);
            auto dec = td_from_json(Json::parse(in));
            auto chk = validate_td(rg.graph, dec);
            Json out;
            out["ok"] = chk.ok;
            out["width"] = chk.width;
            out["violations"] = chk.violations;
            std::cout << canonical_dump(out) << "\n";
            return chk.ok ? 0 : 2;
        };
    });
    auto* tdp = td->add_subcommand("pack-or-hit", "k disjoint models or a bag-union deletion set");
    tdp->set_help_flag("--help", "print help");
    tdp->add_option("--h", pattern)->required();
    tdp->add_option("--l", ell)->required();
    tdp->add_option("--k", k)->required();
    tdp->add_option("--td", td_file)->required();
    tdp->add_flag("--pure", pure);
    tdp->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            std::ifstream in(td_file);
            if (!in) throw std::invalid_argument("cannot open " + td_file);
            auto dec = td_from_json(Json::parse(in));
            Budget b{budget_cap};
            auto r = bounded_tw_pack_or_hit(rg, parse_pattern(pattern), ell, k, dec, pure, b);
            Json out;
            out["packing"] = Json::array();
            for (const auto& m : r.packing) out["packing"].push_back(model_to_json(m));
            for (const auto& w : r.pure_packing) out["packing"].push_back(pure_witness_to_json(w));
            if (r.deletion_set) out["deletion_set"] = *r.deletion_set;
            out["stated_bound"] = r.stated_bound;
            out["safe_bound"] = r.safe_bound;
            std::cout << canonical_dump(out) << "\n";
            return 0;
        };
    });

    auto* pipe = app.add_subcommand("pipeline", "end-to-end packing/covering dichotomy");
    pipe->set_help_flag("--help", "print help");
    pipe->add_option("--h", pattern)->required();
    pipe->add_option("--l", ell)->required();
    pipe->add_option("--k", k)->required();
    pipe->add_option("--td", td_file, "optional tree decomposition JSON file");
    pipe->add_flag("--pure", pure);
    pipe->add_flag("--grid-identity", use_identity_grid,
                   "use the instance's own grid as the supplied grid model");
    pipe->callback([&] {
        action = [&] {
            auto rg = instance_from_json(read_stdin_json());
            EngineConfig cfg;
            cfg.budget = budget_cap;
            PipelineInput in;
            if (!td_file.empty()) {
                std::ifstream f(td_file);
                if (!f) throw std::invalid_argument("cannot open " + td_file);
                in.td = td_from_json(Json::parse(f));
            }
            if (use_identity_grid) {
                if (!rg.graph.is_grid())
                    throw std::invalid_argument("instance must carry grid dimensions");
                in.grid = identity_grid_model(rg.graph);
            }
            auto r = ep_pipeline(rg, parse_pattern(pattern), ell, k, cfg, pure, in);
            for (const auto& line : r.trace) std::cerr << line << "\n";
            std::cout << canonical_dump(duality_report_to_json(r.report)) << "\n";
            return status_exit(r.report.status);
        };
    });

    auto* vn = app.add_subcommand("verify-negative", "check a generated negative instance");
    vn->set_help_flag("--help", "print help");
    vn->add_option("--h", pattern)->required();
    vn->add_option("--l", ell)->required();
    vn->add_option("--x", x)->capture_default_str();
    vn->callback([&] {
        action = [&] {
            auto j = read_stdin_json();
            if (!j.contains("provenance"))
                throw std::invalid_argument("instance lacks a provenance block");
            NegativeInstance inst;
            inst.rg = instance_from_json(j);
            const auto& p = j.at("provenance");
            inst.t = p.at("t").get<int>();
            inst.ell = p.at("ell").get<int>();
            inst.n = p.at("n").get<int>();
            inst.component_offsets = p.at("offsets").get<std::vector<int>>();
            inst.component_orders = p.at("orders").get<std::vector<int>>();
            Budget b{budget_cap};
            auto rep = verify_negative(inst, parse_pattern(pattern), ell, x, b);
            std::cout << canonical_dump(negative_report_to_json(rep)) << "\n";
            return status_exit(rep.status);
        };
    });

    auto* exp = app.add_subcommand("export", "render an instance");
    exp->set_help_flag("--help", "print help");
    auto* dot = exp->add_subcommand("dot", "DOT output for graphviz");
    dot->set_help_flag("--help", "print help");
    dot->callback([&] {
        action = [&] {
            std::cout << to_dot(instance_from_json(read_stdin_json()));
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    if (!action) {
        std::cerr << "missing subcommand\n";
        return 1;
    }
    try {
        return action();
    } catch (const BudgetExceeded&) {
        std::cerr << "search budget exceeded\n";
        return 3;
    } catch (const Json::exception& e) {
        std::cerr << "bad JSON input: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
