#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "primspec/graph.hpp"
#include "primspec/ideals.hpp"
#include "primspec/prim_space.hpp"
#include "primspec/topology.hpp"

namespace primspec::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema = "primspec/1";

// {"vertices": [...], "edges": [["v", "w", "inf"], ["v", "v", 1], ...]}
Json to_json(const Graph& g);
// Throws ValidationError.
Graph graph_from_json(const Json& j);

Json to_json(const VertexSet& s);
Json to_json(const Loop& l);
// {"K": [...], "B": [...]}
Json to_json(const GaugeInvariantIdeal& j);
// {"type": "gamma" | "bv" | "circle", ...}; circle elements carry "t".
Json to_json(const PrimSpace& space, const PrimIdeal& p);
Json to_json(const PrimSpace& space, const PrimNode& p);

// {"gamma": [ids], "bv": [names], "circle": {id: expr}}; empty parts are
// left out, so the empty set is {}.
Json to_json(const PrimSpace& space, const PrimSubset& s);
PrimSubset prim_subset_from_json(const PrimSpace& space, const Json& j);

// Accepts the JSON form or the inline form
//   gamma:M1,M2; bv:v; circle:M3=arc:(0,1/2); circle:M1=T
// Throws ValidationError.
PrimSubset parse_prim_subset(const PrimSpace& space, std::string_view text);

Json tails_report(const PrimSpace& space);
Json prim_report(const PrimSpace& space);

}  // namespace primspec::json
