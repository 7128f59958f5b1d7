#pragma once

#include <map>
#include <optional>
#include <string>

#include "ep/graph.hpp"

namespace ep {

// Partition of an ordered point list into classes of size <= k, each class
// assigned (injectively) to a Z position containing all its points. Classes
// hold 0-based indices into the point list.
struct ZkPartition {
    std::vector<std::vector<int>> classes;
    std::vector<int> gamma;  // class -> Z position
    int k = 1;
};

bool validate_zk_partition(const std::vector<int>& points, const ZFamily& z, const ZkPartition& p,
                           std::string* why = nullptr);

// Exact feasibility via capacitated assignment: each Z position usable by at
// most one class, class capacity k.
std::optional<ZkPartition> find_zk_partition(const std::vector<int>& points, const ZFamily& z,
                                             int k);

// Refinement of a (Z,k)-partition of exactly k*ell points into index classes
// I_1..I_k of size ell, per-class injections into Z positions, and anchor
// pairs (a_j,b_j) with no later-class index strictly between them. Anchors are
// absent when ell == 1 (classes are singletons, no pair exists).
struct RefinedPartition {
    std::vector<std::vector<int>> index_classes;            // I_1..I_k, 0-based indices
    std::vector<std::map<int, int>> betas;                  // per class: index -> Z position
    std::vector<std::optional<std::pair<int, int>>> anchors;
};

RefinedPartition refine_partition(const std::vector<int>& points, const ZFamily& z, int k, int ell,
                                  const ZkPartition& base);

bool validate_refined(const std::vector<int>& points, const ZFamily& z, int k, int ell,
                      const RefinedPartition& r, std::string* why = nullptr);

// Vertex-disjoint paths from members of Z to Y whose Z-side endpoints admit a
// (Z,k)-partition.
struct Linkage {
    std::vector<std::vector<int>> paths;  // each path starts in some Z member, ends in Y
    std::vector<int> z_endpoints;         // ordered Z-side endpoints, one per path
    ZkPartition partition;                // over z_endpoints
};

bool validate_linkage(const RootedGraph& rg, const VertexSet& y, int k, const Linkage& l,
                      std::string* why = nullptr);

// Menger-style dichotomy: either a separation (A,B) of order <
// k*(ell - ||Z minus A||) with Y inside B and ||Z minus A|| <= ell-1, or a
// linkage of order k*ell. Total: exactly one branch is always populated.
struct LinkageOrSeparation {
    std::optional<Linkage> linkage;
    std::optional<Separation> separation;
};

LinkageOrSeparation linkage_or_separation(const RootedGraph& rg, const VertexSet& y, int k,
                                          int ell);

// Number of positions of z with a vertex outside `a` (the quantity bounding
// separation order in the dichotomy).
int missing_positions(const ZFamily& z, const VertexSet& a);

}  // namespace ep
