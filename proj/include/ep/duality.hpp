#pragma once

#include "ep/rooted_grid.hpp"
#include "ep/treewidth.hpp"

namespace ep {

// Linear combination of kappa-values plus a constant, where kappa is an
// opaque monotone function supplied at evaluation time. kappa_terms maps a
// kappa argument to its coefficient.
struct SymbolicBound {
    std::map<long long, long long> kappa_terms;
    long long constant = 0;

    bool operator==(const SymbolicBound&) const = default;
    SymbolicBound& operator+=(const SymbolicBound& o);
    long long evaluate(const std::function<long long(long long)>& kappa) const;
};

SymbolicBound operator+(SymbolicBound a, const SymbolicBound& b);
SymbolicBound operator*(long long c, SymbolicBound b);

// Threshold functions of the duality recursion. h is the pattern vertex
// count; x(k) = k*ell^2 and g(k) = 2(4x^2+14hx+3x+1)(4x^2+1)+x.
long long x_threshold(int k, int ell);
long long g_threshold(int k, int ell, int h);

// Deletion-set bound for pure models (single kappa-term at ell = 1, plus a
// recursive tail for ell >= 2), and the ordinary-model bound
// f(k) = ell*f1(k) + k*ell^2.
SymbolicBound f1_bound(int k, int ell, int h);
SymbolicBound f_bound(int k, int ell, int h);

struct EngineConfig {
    bool use_paper_constants = true;
    // Overrides applied when use_paper_constants is false (desk scale):
    // block order of the extracted sub-grids (default 14h) and target order of
    // the rooted grid search (default k*ell*(block+2)+1).
    int block_order = 0;
    int grid_target_order = 0;
    bool permissive = true;  // tolerate hosts below the strict order bounds
    long long budget = 10'000'000;
    // kappa used when evaluating reported bounds; identity when absent.
    std::function<long long(long long)> kappa;

    long long x(int k, int ell) const { return x_threshold(k, ell); }
    long long g(int k, int ell, int h) const { return g_threshold(k, ell, h); }
    int effective_block(int h) const;
    int effective_target(int k, int ell, int h) const;
};

// Either k disjoint grid-copy witnesses each meeting ell members of Z, or a
// separation (A,B) of order < k*ell^2 with ||Z minus A|| = ell' < ell whose
// far side B - V(A) carries both a large grid model and a
// (Z minus A, k, ell')-rooted grid model. Built by iteratively merging the
// separations returned by the rooted-grid search.
struct SeparateOutcome {
    std::optional<std::vector<GridWitness>> models;
    struct SeparationBranch {
        Separation sep;
        int ell_prime = 0;
        GridModel grid;          // grid model inside B - V(A)
        RootedGridModel rooted;  // (Z minus A, k, ell')-rooted grid model
    };
    std::optional<SeparationBranch> separation;
    bool inconclusive = false;
};

SeparateOutcome separate_or_models(const RootedGraph& rg, const GridModel& m, int k, int h,
                                   int ell, const EngineConfig& cfg = {});

// Lifts a deletion set T of A - V(B) (for members of Z inside V(A), threshold
// ell - ell') to a deletion set of the whole graph: T union V(A intersect B).
VertexSet reduce_across_separation(const RootedGraph& rg, const Separation& sep, int ell,
                                   int ell_prime, const VertexSet& t);

// Candidate vertex whose removal provably preserves the pure covering number:
// any vertex of B - V(A) when the separation has order 0, otherwise the
// smallest vertex of the rooted grid model's last-row-last-column branch set.
enum class IrrelevantMode { Z_EMPTY, Z_ONE };

int irrelevant_vertex_candidate(const RootedGraph& rg, const Separation& sep,
                                const std::optional<RootedGridModel>& m, IrrelevantMode mode);

// End-to-end packing/covering dichotomy. Structural inputs (a tree
// decomposition or a grid model of the host) select the constructive
// branches; otherwise the exact oracle decides. Every emitted packing or
// deletion set is certified by a fresh model search.
struct PipelineInput {
    std::optional<TreeDecomposition> td;
    std::optional<GridModel> grid;
};

struct PipelineResult {
    DualityReport report;
    std::vector<std::string> trace;  // JSON lines, one per branch decision
    SymbolicBound stated_bound;
};

PipelineResult ep_pipeline(const RootedGraph& rg, const Graph& h, int ell, int k,
                           const EngineConfig& cfg, bool pure, const PipelineInput& input = {});

}  // namespace ep
