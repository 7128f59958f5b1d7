#pragma once

#include "ep/graph.hpp"

namespace ep {

// Result of a unit-vertex-capacity disjoint-path computation.
struct VertexFlow {
    int value = 0;
    // Vertex-disjoint source->target paths in original vertex ids (only
    // populated when value reached `limit`).
    std::vector<std::vector<int>> paths;
    // A minimum vertex cut separating sources from targets (when value <
    // limit), extracted from the source-side residual reachability.
    VertexSet cut;
    // Residual reachability of each vertex's entry/exit node from the source.
    std::vector<char> in_reach, out_reach;
};

// Maximum set of vertex-disjoint paths from `sources` to `targets` (endpoints
// count against disjointness), capped at `limit`. With `one_way_sources`, no
// path may pass through a source vertex in its interior.
VertexFlow vertex_disjoint_paths(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                                 int limit, bool one_way_sources = false);

}  // namespace ep
