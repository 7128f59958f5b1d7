#include "ep/json_io.hpp"

#include <sstream>

namespace ep {

std::string canonical_dump(const Json& j) { return j.dump(); }

Json instance_to_json(const RootedGraph& rg, const Json& provenance) {
    Json j;
    j["n"] = rg.graph.num_vertices();
    j["edges"] = Json::array();
    for (auto [u, v] : rg.graph.edges()) j["edges"].push_back({u, v});
    j["z"] = Json::array();
    for (const auto& zi : rg.z) j["z"].push_back(zi);
    if (rg.graph.is_grid()) {
        auto [g, h] = rg.graph.grid_dims();
        j["grid"] = {g, h};
    }
    if (!provenance.is_null()) j["provenance"] = provenance;
    return j;
}

RootedGraph instance_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges") || !j.contains("z"))
        throw std::invalid_argument("instance needs n, edges, z");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    RootedGraph rg;
    rg.graph = Graph(n, edges);
    if (j.contains("grid")) {
        auto g = j.at("grid")[0].get<int>(), h = j.at("grid")[1].get<int>();
        rg.graph.set_grid_dims(g, h);
    }
    for (const auto& zi : j.at("z")) rg.z.push_back(sorted_unique(zi.get<std::vector<int>>()));
    validate_rooted(rg);
    return rg;
}

Json pattern_to_json(const Graph& g) {
    Json j;
    j["n"] = g.num_vertices();
    j["edges"] = Json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

Graph pattern_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n")) throw std::invalid_argument("pattern needs n");
    std::vector<Edge> edges;
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    return Graph(j.at("n").get<int>(), edges);
}

Json td_to_json(const TreeDecomposition& td) {
    Json j;
    j["tree_edges"] = Json::array();
    for (auto [u, v] : td.tree.edges()) j["tree_edges"].push_back({u, v});
    j["bags"] = Json::array();
    for (const auto& b : td.bags) j["bags"].push_back(b);
    return j;
}

TreeDecomposition td_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("bags"))
        throw std::invalid_argument("tree decomposition needs bags");
    TreeDecomposition td;
    for (const auto& b : j.at("bags")) td.bags.push_back(sorted_unique(b.get<std::vector<int>>()));
    std::vector<Edge> edges;
    if (j.contains("tree_edges"))
        for (const auto& e : j.at("tree_edges"))
            edges.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    td.tree = Graph(static_cast<int>(td.bags.size()), edges);
    return td;
}

Json model_to_json(const ModelFunction& m) {
    Json j;
    j["branch_sets"] = Json::object();
    for (const auto& [v, bs] : m.branch_sets) j["branch_sets"][std::to_string(v)] = bs;
    j["branch_edges"] = Json::object();
    for (const auto& [i, e] : m.branch_edges)
        j["branch_edges"][std::to_string(i)] = {e.first, e.second};
    return j;
}

Json pure_witness_to_json(const PureModelWitness& w) {
    Json j;
    j["components"] = w.component_indices;
    j["model"] = model_to_json(w.model);
    j["alpha"] = Json::object();
    for (const auto& [c, ps] : w.alpha) j["alpha"][std::to_string(c)] = ps;
    return j;
}

Json separation_to_json(const Separation& s) {
    Json j;
    j["a_vertices"] = s.a_vertices;
    j["b_vertices"] = s.b_vertices;
    j["order"] = s.order();
    j["separator"] = s.separator();
    return j;
}

Json linkage_to_json(const Linkage& l) {
    Json j;
    j["paths"] = l.paths;
    j["z_endpoints"] = l.z_endpoints;
    j["partition"] = Json::object();
    j["partition"]["classes"] = l.partition.classes;
    j["partition"]["gamma"] = l.partition.gamma;
    j["partition"]["k"] = l.partition.k;
    return j;
}

Json grid_model_to_json(const GridModel& m) {
    Json j = model_to_json(m.eta);
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    return j;
}

Json rooted_grid_model_to_json(const RootedGridModel& m) {
    Json j;
    j["grid"] = grid_model_to_json(m.grid);
    j["roots"] = m.roots;
    j["partition"] = Json::object();
    j["partition"]["classes"] = m.partition.classes;
    j["partition"]["gamma"] = m.partition.gamma;
    j["partition"]["k"] = m.partition.k;
    return j;
}

Json duality_report_to_json(const DualityReport& r) {
    Json j;
    j["k"] = r.k;
    j["status"] = status_name(r.status);
    if (r.nu) j["nu"] = *r.nu;
    if (r.tau) j["tau"] = *r.tau;
    j["packing"] = Json::array();
    for (const auto& m : r.packing) j["packing"].push_back(model_to_json(m));
    for (const auto& w : r.pure_packing) j["packing"].push_back(pure_witness_to_json(w));
    if (r.deletion_set) j["deletion_set"] = *r.deletion_set;
    j["note"] = r.note;
    return j;
}

Json negative_report_to_json(const NegativeReport& r) {
    Json j;
    j["status"] = status_name(r.status);
    j["has_model"] = r.has_model;
    j["packing_is_one"] = r.packing_is_one;
    j["robust"] = r.robust;
    if (r.failing_s) j["failing_s"] = *r.failing_s;
    j["threshold_n"] = r.threshold_n;
    j["note"] = r.note;
    return j;
}

std::string to_dot(const RootedGraph& rg) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < rg.graph.num_vertices(); ++v) {
        auto hp = hit_positions({v}, rg.z);
        out << "  " << v;
        if (!hp.empty()) {
            out << " [peripheries=2,label=\"" << v << " Z";
            for (size_t i = 0; i < hp.size(); ++i) out << (i ? "," : "") << hp[i] + 1;
            out << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : rg.graph.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ep
