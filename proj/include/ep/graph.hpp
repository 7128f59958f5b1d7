#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ep {

using Vertex = int;
using Edge = std::pair<int, int>;  // normalized: first < second
using VertexSet = std::vector<int>;  // sorted, unique
using EdgeSet = std::vector<Edge>;   // sorted, unique

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop");
    return u < v ? Edge{u, v} : Edge{v, u};
}

VertexSet sorted_unique(std::vector<int> xs);
EdgeSet sorted_unique_edges(std::vector<Edge> es);
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);

// Simple undirected graph on dense vertex ids 0..n-1.
// Grid graphs additionally carry (rows, cols) dimensions; the vertex at
// 1-based coordinate (i,j) has id (i-1)*cols + (j-1).
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);

    static Graph grid(int g, int h);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    const EdgeSet& edges() const { return edges_; }

    bool is_grid() const { return grid_dims_.has_value(); }
    std::pair<int, int> grid_dims() const;
    int grid_id(int row, int col) const;          // 1-based coordinates
    std::pair<int, int> grid_coord(int v) const;  // 1-based coordinates
    VertexSet grid_row(int row) const;
    VertexSet grid_column(int col) const;

    // Marks this graph as carrying grid coordinates (used after relabeling).
    void set_grid_dims(int g, int h);

private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    EdgeSet edges_;
    std::optional<std::pair<int, int>> grid_dims_;
};

struct GridCoord {
    int row = 0;
    int col = 0;
};

// Multiset of vertex subsets; identity of a member is its list position, so
// duplicate sets are distinguishable.
using ZFamily = std::vector<VertexSet>;

struct RootedGraph {
    Graph graph;
    ZFamily z;
};

// Throws std::invalid_argument if some Z member contains an unknown vertex.
void validate_rooted(const RootedGraph& rg);

// Counts members with multiplicity, excluding empty sets.
int multiset_size(const ZFamily& z);
// Element-wise intersection with b, preserving multiplicity and order.
ZFamily restrict_multiset(const ZFamily& z, const VertexSet& b);
// Element-wise set difference, preserving multiplicity and order.
ZFamily subtract_multiset(const ZFamily& z, const VertexSet& b);
// Number of members of z (excluding empty) intersecting f.
int hits_count(const VertexSet& f, const ZFamily& z);
// Positions of members of z (excluding empty) intersecting f.
std::vector<int> hit_positions(const VertexSet& f, const ZFamily& z);

struct Separation {
    VertexSet a_vertices;
    VertexSet b_vertices;
    EdgeSet a_edges;
    EdgeSet b_edges;

    VertexSet separator() const { return set_intersect(a_vertices, b_vertices); }
    int order() const { return static_cast<int>(separator().size()); }
};

struct SeparationCheck {
    bool ok = false;
    int order = -1;
    std::vector<std::string> violations;
};

SeparationCheck validate_separation(const Graph& g, const Separation& s);

// Disjoint union with injective relabeling; component_offsets[i] is the id
// offset of the i-th input graph.
struct DisjointUnion {
    Graph graph;
    std::vector<int> component_offsets;
};

DisjointUnion disjoint_union(const std::vector<Graph>& graphs);

// Connectivity helpers. "alive" restricts to a vertex subset when non-null.
std::vector<VertexSet> connected_components(const Graph& g);
std::vector<VertexSet> connected_components_within(const Graph& g, const VertexSet& subset);
bool is_connected_subset(const Graph& g, const VertexSet& subset);

// Induced subgraph on `keep` with dense relabeling; to_orig maps new ids back.
struct InducedGraph {
    Graph graph;
    std::vector<int> to_orig;
    std::vector<int> from_orig;  // -1 for dropped vertices
};

InducedGraph induced_subgraph(const Graph& g, const VertexSet& keep);

// BFS distances from a source set; -1 for unreachable. "forbidden" vertices
// are not entered.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources,
                               const VertexSet& forbidden = {});

// A shortest path from `from` to any vertex of `targets`, avoiding
// `forbidden`; empty if none exists.
std::vector<int> shortest_path_to(const Graph& g, int from, const VertexSet& targets,
                                  const VertexSet& forbidden = {});

}  // namespace ep
