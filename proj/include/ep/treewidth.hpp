#pragma once

#include "ep/pack_cover.hpp"

namespace ep {

struct TreeDecomposition {
    Graph tree;                 // acyclic, connected; node ids 0..t-1
    std::vector<VertexSet> bags;  // one per tree node

    int width() const {
        int w = -1;
        for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
        return w;
    }
};

struct TdCheck {
    bool ok = false;
    int width = -1;
    std::vector<std::string> violations;  // named by first violated axiom
};

TdCheck validate_td(const Graph& g, const TreeDecomposition& td);

// Family of subgraphs of a host tree, each given by its node set and inducing
// at most d connected components.
struct DSubtreeFamily {
    int d = 1;
    std::vector<VertexSet> members;
};

// Either k pairwise disjoint members, or an exact minimum hitting set whose
// size must respect the (d^2-d+1)(k-1) bound.
struct DSubtreeOutcome {
    std::optional<std::vector<int>> packing;  // member indices
    std::optional<VertexSet> hitting;
    int nu = 0;
};

DSubtreeOutcome d_subtree_pack_or_hit(const Graph& tree, const DSubtreeFamily& f, int k,
                                      Budget& budget);

// Bounded-treewidth packing/covering dichotomy: k disjoint (pure) models, or a
// deletion set formed from the bags of a d-subtree hitting set. The deletion
// set is re-certified by a fresh model search.
struct TwPackOrHit {
    std::vector<ModelFunction> packing;
    std::vector<PureModelWitness> pure_packing;
    std::optional<VertexSet> deletion_set;
    long long stated_bound = 0;  // (w-1)(h^2-h+1)(k-1), reported only
    long long safe_bound = 0;    // (w+1)(h^2-h+1)(k-1), asserted
};

TwPackOrHit bounded_tw_pack_or_hit(const RootedGraph& rg, const Graph& h, int ell, int k,
                                   const TreeDecomposition& td, bool pure, Budget& budget);

}  // namespace ep
