#pragma once

#include <functional>

#include "ep/model.hpp"

namespace ep {

enum class Status { ok, violation, undecided };

std::string status_name(Status s);

// Exact maximum number of pairwise vertex-disjoint (pure) models, with
// witnesses. Exhaustive: enumerates minimal good vertex sets, then solves the
// disjoint-packing problem exactly. Desk scale only (n <= 25).
struct PackingResult {
    int nu = 0;
    std::vector<ModelFunction> witnesses;          // ordinary mode
    std::vector<PureModelWitness> pure_witnesses;  // pure mode
};

PackingResult packing_number(const RootedGraph& rg, const Graph& h, int ell, bool pure,
                             Budget& budget);

// Exact minimum deletion set via violator-driven branch and bound: any cover
// must hit every model's image, so branching on a (minimalized) witness image
// is exhaustive. `universe` restricts both the graph and the candidate
// deletion vertices when non-empty.
struct CoveringResult {
    int tau = 0;
    VertexSet deletion_set;
};

CoveringResult covering_number(const RootedGraph& rg, const Graph& h, int ell, bool pure,
                               Budget& budget, const VertexSet& universe = {});

// True iff the pure covering numbers of G and G - v coincide.
bool is_irrelevant(const RootedGraph& rg, const Graph& h, int ell, int v, Budget& budget);

struct DualityReport {
    int k = 0;
    Status status = Status::undecided;
    std::optional<int> nu, tau;
    std::vector<ModelFunction> packing;
    std::vector<PureModelWitness> pure_packing;
    std::optional<VertexSet> deletion_set;
    std::string note;
};

// Asserts the packing/covering dichotomy at threshold k: nu >= k, or
// tau <= bound(k). Budget exhaustion yields status undecided.
DualityReport check_duality(const RootedGraph& rg, const Graph& h, int ell, int k,
                            const std::function<long long(int)>& bound, bool pure, Budget& budget);

// A minimal vertex set W inside `allowed` (whole graph when empty) such that
// G[W] carries a (pure) model; nullopt if none. Used for cover branching and
// exposed for tests.
std::optional<VertexSet> minimal_good_set(const RootedGraph& rg, const Graph& h, int ell,
                                          bool pure, Budget& budget, const VertexSet& allowed);

// Every inclusion-minimal vertex set carrying a (pure) model, by exhaustive
// subset enumeration (n <= 25).
std::vector<VertexSet> all_minimal_good_sets(const RootedGraph& rg, const Graph& h, int ell,
                                             bool pure, Budget& budget);

}  // namespace ep
