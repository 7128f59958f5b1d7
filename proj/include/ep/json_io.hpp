#pragma once

#include "json.hpp"

#include "ep/counterexample.hpp"
#include "ep/duality.hpp"

namespace ep {

using Json = nlohmann::json;

// Canonical text form: compact separators with keys in sorted order (the
// default object representation), so parse + dump is byte-stable.
std::string canonical_dump(const Json& j);

// Instance format: {"n": int, "edges": [[u,v],...], "z": [[v,...],...]} with
// optional "grid": [g,h] (row-major ids) and an opaque "provenance" object.
Json instance_to_json(const RootedGraph& rg, const Json& provenance = Json());
RootedGraph instance_from_json(const Json& j);

// Pattern graphs use the same {"n", "edges"} shape.
Json pattern_to_json(const Graph& g);
Graph pattern_from_json(const Json& j);

// Tree decompositions: {"tree_edges": [[a,b],...], "bags": [[v,...],...]}.
Json td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const Json& j);

Json model_to_json(const ModelFunction& m);
Json pure_witness_to_json(const PureModelWitness& w);
Json separation_to_json(const Separation& s);
Json linkage_to_json(const Linkage& l);
Json grid_model_to_json(const GridModel& m);
Json rooted_grid_model_to_json(const RootedGridModel& m);
Json duality_report_to_json(const DualityReport& r);
Json negative_report_to_json(const NegativeReport& r);

// DOT rendering of an instance; vertices in Z members get peripheries/labels.
std::string to_dot(const RootedGraph& rg);

}  // namespace ep
