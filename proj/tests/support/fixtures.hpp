#pragma once

#include "primspec/graph_io.hpp"

namespace fixtures {

inline constexpr const char* e1_text = R"(graph {
  vertices: v, w;
  edge v -> v;
  edge v -> w [inf];
})";

inline constexpr const char* e2_text = R"(graph {
  vertices: u, v, w;
  edge u -> u;
  edge u -> v;
  edge v -> w [inf];
  edge w -> w;
})";

inline primspec::Graph e1() { return primspec::parse_graph(e1_text); }
inline primspec::Graph e2() { return primspec::parse_graph(e2_text); }

}  // namespace fixtures
