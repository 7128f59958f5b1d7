#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ep/graph.hpp"

namespace ep {

// Raised when an exhaustive search runs out of its configured budget. Distinct
// from "no such object exists".
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

struct Budget {
    long long remaining = 10'000'000;
    void tick(long long cost = 1) {
        remaining -= cost;
        if (remaining < 0) throw BudgetExceeded{};
    }
};

// Branch-set map realizing a pattern H as a minor of a host G.
struct ModelFunction {
    // branch_sets[v] is the (nonempty) host-vertex set for pattern vertex v.
    std::map<int, VertexSet> branch_sets;
    // branch_edges[i] realizes the i-th edge of the pattern's edge list.
    std::map<int, Edge> branch_edges;

    VertexSet image_vertices() const;
};

struct ModelCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

ModelCheck validate_model_function(const Graph& g, const Graph& h, const ModelFunction& eta);

// Pure (H,Z,l)-model witness: a subset of H's components, a model of their
// union, and a disjoint assignment of Z positions to components.
struct PureModelWitness {
    std::vector<int> component_indices;  // indices into components of H
    ModelFunction model;                 // over the union of those components (original H ids)
    std::map<int, std::vector<int>> alpha;  // component index -> Z positions
};

struct PureModelCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

PureModelCheck validate_pure_witness(const RootedGraph& rg, const Graph& h, int ell,
                                     const PureModelWitness& w);

// Exhaustive search for an (H,Z,l)-model: a valid model of H whose image
// intersects at least `ell` distinct members of Z (multiset positions).
// `within` restricts the search to a vertex subset of the host when non-empty.
std::optional<ModelFunction> find_hzl_model(const RootedGraph& rg, const Graph& h, int ell,
                                            Budget& budget, const VertexSet& within = {});

std::optional<ModelFunction> find_hzl_model(const RootedGraph& rg, const Graph& h, int ell);

std::optional<PureModelWitness> find_pure_model(const RootedGraph& rg, const Graph& h, int ell,
                                                Budget& budget, const VertexSet& within = {});

std::optional<PureModelWitness> find_pure_model(const RootedGraph& rg, const Graph& h, int ell);

// True iff G[within] contains an (H,Z,l)-model (whole graph when empty).
bool has_hzl_model(const RootedGraph& rg, const Graph& h, int ell, Budget& budget,
                   const VertexSet& within = {});
bool has_pure_model(const RootedGraph& rg, const Graph& h, int ell, Budget& budget,
                    const VertexSet& within = {});

// Extends branch sets of a model so the image covers all of `region` (which
// must be a superset of the current image with every extra vertex reachable
// from it). Keeps each branch set connected.
ModelFunction saturate_model(const Graph& g, ModelFunction eta, const VertexSet& region);

// Named pattern presets for the CLI and tests: K1, K2, P3, C4, 2K1, 2K2.
std::optional<Graph> pattern_preset(const std::string& name);

}  // namespace ep
