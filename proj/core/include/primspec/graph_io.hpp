#pragma once

#include <string>
#include <string_view>

#include "primspec/graph.hpp"

namespace primspec {

// Parses the graph file format:
//
//   graph    := "graph" "{" decl* "}"
//   decl     := "vertices:" id ("," id)* ";"
//             | "edge" id "->" id mult? ";"
//   mult     := "[" (INTEGER | "inf") "]"
//
// '#' starts a comment running to the end of the line. Repeated edge lines
// for the same pair add up. Throws ParseError with a 1-based position.
Graph parse_graph(std::string_view text);

// Canonical text form; parse_graph(format_graph(g)) == g.
std::string format_graph(const Graph& g);

}  // namespace primspec
