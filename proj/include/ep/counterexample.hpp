#pragma once

#include "ep/pack_cover.hpp"

namespace ep {

// n x n grid whose three Z members are the first column, first row, and last
// column, each without its corner vertices.
RootedGraph figure1_instance(int n);

// Disjoint union of one grid of order (ell-t+2)*n and t-1 grids of order n
// (t = number of pattern components), with ell first-row Z blocks: blocks
// j = 1..ell-t+1 are width-n slices of the big grid's first row, and block
// ell-t+1+i is the full first row of the i-th small grid.
struct NegativeInstance {
    RootedGraph rg;
    int t = 1, ell = 3, n = 1;
    std::vector<int> component_offsets;  // id offset of each grid component
    std::vector<int> component_orders;   // grid order of each component
};

NegativeInstance negative_family(const Graph& h, int ell, int n);

// Size the construction needs to defeat deletion sets of size x (recorded for
// reporting; verification is exhaustive instead).
long long negative_threshold(int h, int x);

// Exhaustive verification: one model exists, no two disjoint models (shown
// structurally: Z blocks are disjoint consecutive first-row intervals, so two
// disjoint connected triple-hitters would have to cross), and every deletion
// of at most x vertices leaves a model.
struct NegativeReport {
    Status status = Status::undecided;
    bool has_model = false;
    bool packing_is_one = false;
    bool robust = false;              // clause (b)
    std::optional<VertexSet> failing_s;  // witness when clause (b) fails
    long long threshold_n = 0;
    std::string note;
};

NegativeReport verify_negative(const NegativeInstance& inst, const Graph& h, int ell, int x,
                               Budget& budget);

}  // namespace ep
