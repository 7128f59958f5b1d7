#pragma once

#include "ep/linkage.hpp"
#include "ep/model.hpp"

namespace ep {

// Model of a rows x cols grid pattern in a host graph. Pattern vertex ids
// follow the grid convention: (i,j) (1-based) is (i-1)*cols + (j-1).
struct GridModel {
    int rows = 0, cols = 0;
    ModelFunction eta;

    int order() const { return rows; }
    int cell_id(int r, int c) const { return (r - 1) * cols + (c - 1); }
    const VertexSet& cell(int r, int c) const { return eta.branch_sets.at(cell_id(r, c)); }
};

bool validate_grid_model(const Graph& g, const GridModel& m, std::string* why = nullptr);

// Grid model of order g whose first-row branch sets eta(v_{1,i}), i in [k*ell],
// contain root vertices admitting a (Z,k)-partition.
struct RootedGridModel {
    GridModel grid;
    std::vector<int> roots;  // roots[i] lies in eta(v_{1,i+1})
    ZkPartition partition;   // over roots, capacity k
};

bool validate_rooted_grid_model(const RootedGraph& rg, int k, int ell, const RootedGridModel& m,
                                std::string* why = nullptr);

// Restriction of a square grid model of order n under deletion of S (|S| < n):
// a valid grid model of order n-|S| avoiding S whose image contains every row
// and column of the original untouched by S.
GridModel restrict_grid_model(const Graph& g, const GridModel& m, const VertexSet& s);

// Dichotomy of the rooted-grid search: either a rooted grid model of order
// `g`, or a separation (A,B) of order < k*(ell - ||Z minus A||) with
// ||Z minus A|| <= ell-1 and an explicit restricted grid model inside
// B - V(A). Permissive mode tolerates hosts below the strict order bound and
// may return inconclusive.
struct RootedGridOutcome {
    std::optional<RootedGridModel> model;
    struct SeparationBranch {
        Separation sep;
        GridModel restricted;  // grid model of order n - |V(A intersect B)| in B - V(A)
    };
    std::optional<SeparationBranch> separation;
    bool inconclusive = false;
};

RootedGridOutcome rooted_grid_or_separation(const RootedGraph& rg, const GridModel& m, int g,
                                            int k, int ell, bool permissive = false);

// Extraction of k pairwise disjoint witnesses from a rooted grid model of
// order >= k*ell*(h+2)+1. FULL: (ell copies of G_h, Z, ell)-models. REDUCED
// (needs ell >= 2): (ell-1 copies of G_h, Z, ell)-models using connecting
// paths between anchored subgrids.
enum class GridExtract { FULL, REDUCED };

struct GridWitness {
    ModelFunction model;       // over the pattern: copies x (h x h grid)
    std::vector<int> z_hits;   // distinct Z positions met (>= ell)
};

std::vector<GridWitness> models_from_rooted_grid(const RootedGraph& rg, const RootedGridModel& m,
                                                 int k, int ell, int h, GridExtract variant);

// Pattern backing the witnesses: `copies` disjoint h x h grids.
Graph grid_copies_pattern(int copies, int h);

}  // namespace ep
