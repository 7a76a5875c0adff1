#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "primspec/errors.hpp"
#include "primspec/graph.hpp"
#include "primspec/graph_io.hpp"

using namespace primspec;

TEST_SUITE("graph-core") {

TEST_CASE("cardinality arithmetic") {
  const Cardinality w = Cardinality::omega();
  CHECK(Cardinality{2} + Cardinality{3} == Cardinality{5});
  CHECK(w + Cardinality{3} == w);
  CHECK(Cardinality{3} + w == w);
  CHECK(Cardinality{0} * w == Cardinality{0});
  CHECK(w * Cardinality{2} == w);
  CHECK(Cardinality{7} < w);
  CHECK(w.to_string() == "inf");
  CHECK_THROWS_AS(Cardinality{Cardinality::max_finite} + Cardinality{1}, std::overflow_error);
  CHECK_THROWS_AS(Cardinality{Cardinality::max_finite + 1}, std::overflow_error);
  CHECK_THROWS(w.value());
}

TEST_CASE("parse fixture e1") {
  const Graph g = fixtures::e1();
  CHECK(g.vertices() == std::vector<VertexId>{"v", "w"});
  const auto edges = g.edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == Edge{"v", "v", Cardinality{1}});
  CHECK(edges[1] == Edge{"v", "w", Cardinality::omega()});
}

TEST_CASE("parse edgeless graph") {
  const Graph g = parse_graph("graph { vertices: a; }");
  CHECK(g.vertices() == std::vector<VertexId>{"a"});
  CHECK(g.edges().empty());
}

TEST_CASE("parallel edge lines add up") {
  const Graph g = parse_graph(
      "graph { vertices: a, b;\n edge a -> b;\n edge a -> b [2]; }");
  REQUIRE(g.edges().size() == 1);
  CHECK(g.edges()[0].multiplicity == Cardinality{3});
  CHECK(parse_graph(format_graph(g)) == g);
  const Graph h = parse_graph("graph { vertices: a, b; edge a -> b [inf]; edge a -> b; }");
  CHECK(h.edges()[0].multiplicity.is_omega());
}

TEST_CASE("the empty graph is legal") {
  const Graph g = parse_graph("graph { }");
  CHECK(g.empty());
  CHECK(is_row_finite(g));
  CHECK(parse_graph(format_graph(g)) == g);
}

TEST_CASE("comments and whitespace") {
  const Graph g = parse_graph("# header\ngraph {\n  vertices: x_1, Y2; # trailing\n  edge x_1 -> Y2 [4];\n}\n");
  CHECK(g.edges()[0].multiplicity == Cardinality{4});
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_graph("graph {\n  vertices: a;\n  edge a -> b;\n}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.message().find("undeclared") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("graph { vertices: a; edge a -> a [0]; }"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { vertices: a; edge a a; }"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { vertices: a, a; }"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { vertices: a; } extra"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph { vertices: a; edge a -> a [99999999999999999999]; }"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph("graph { vertices: a-b; }"), ParseError);
}

TEST_CASE("graph construction validates") {
  CHECK_THROWS_AS(Graph({"a"}, {{"a", "b", Cardinality{1}}}), ValidationError);
  CHECK_THROWS_AS(Graph({"a"}, {{"a", "a", Cardinality{0}}}), ValidationError);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), ValidationError);
  CHECK_THROWS_AS(Graph({""}, {}), ValidationError);
  CHECK_THROWS_AS(Graph({"a"}, {{"a", "a", Cardinality{Cardinality::max_finite}},
                                {"a", "a", Cardinality{1}}}),
                  ValidationError);
}

TEST_CASE("out_cardinality") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  CHECK(out_cardinality(g1, "v").is_omega());
  CHECK(out_cardinality(g1, "w") == Cardinality{0});
  CHECK(out_cardinality(g2, "u") == Cardinality{2});
  CHECK_THROWS_AS(out_cardinality(g1, "q"), ValidationError);
}

TEST_CASE("out_cardinality_into") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  CHECK(out_cardinality_into(g1, "v", VertexSet{"w"}).is_omega());
  CHECK(out_cardinality_into(g1, "v", VertexSet{}) == Cardinality{0});
  CHECK(out_cardinality_into(g2, "v", VertexSet{"w"}).is_omega());
  CHECK(out_cardinality_into(g2, "u", VertexSet{"u", "w"}) == Cardinality{1});
}

TEST_CASE("reaches") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  CHECK(reaches(g2, "u", "w"));
  CHECK_FALSE(reaches(g2, "w", "u"));
  CHECK(reaches(g1, "v", "v"));
  CHECK(reaches(g1, "w", "w"));
  CHECK_THROWS_AS(reaches(g1, "v", "x"), ValidationError);
}

TEST_CASE("tail_of_vertex") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  CHECK(tail_of_vertex(g2, "v") == VertexSet{"u", "v"});
  CHECK(tail_of_vertex(g2, "u") == VertexSet{"u"});
  CHECK(tail_of_vertex(g1, "w") == VertexSet{"v", "w"});
}

TEST_CASE("vertex_simple_loops") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  const auto l2 = vertex_simple_loops(g2, g2.vertex_set());
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].vertices == std::vector<VertexId>{"u"});
  CHECK(l2[1].vertices == std::vector<VertexId>{"w"});
  CHECK(vertex_simple_loops(g1, VertexSet{"w"}).empty());
  const auto l1 = vertex_simple_loops(g1, g1.vertex_set());
  REQUIRE(l1.size() == 1);
  CHECK(l1[0].vertices == std::vector<VertexId>{"v"});
}

TEST_CASE("loops are stored from their least vertex") {
  const Graph g = parse_graph("graph { vertices: a, b, c; edge c -> a; edge a -> b; edge b -> c; edge b -> a [3]; }");
  const auto loops = vertex_simple_loops(g, g.vertex_set());
  REQUIRE(loops.size() == 2);
  CHECK(loops[0].vertices == std::vector<VertexId>{"a", "b"});
  CHECK(loops[1].vertices == std::vector<VertexId>{"a", "b", "c"});
  CHECK(Loop::canonical({"c", "a", "b"}).vertices == std::vector<VertexId>{"a", "b", "c"});
  CHECK(loops[1].edges() == std::vector<std::pair<VertexId, VertexId>>{
                                {"a", "b"}, {"b", "c"}, {"c", "a"}});
}

TEST_CASE("is_row_finite") {
  CHECK_FALSE(is_row_finite(fixtures::e1()));
  CHECK_FALSE(is_row_finite(fixtures::e2()));
  CHECK(is_row_finite(parse_graph("graph { vertices: a; }")));
  CHECK(is_row_finite(parse_graph("graph { vertices: a, b; edge a -> b [5]; }")));
}

TEST_CASE("reachability is a preorder and tails are upward closed") {
  std::mt19937_64 rng(11);
  const std::vector<Cardinality> palette{Cardinality{1}, Cardinality{2}, Cardinality::omega()};
  for (int round = 0; round < 200; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 6, 0.3, palette);
    const auto& vs = g.vertices();
    for (const auto& a : vs) {
      CHECK(reaches(g, a, a));
      for (const auto& b : vs)
        for (const auto& c : vs)
          if (reaches(g, a, b) && reaches(g, b, c)) CHECK(reaches(g, a, c));
      const VertexSet t = tail_of_vertex(g, a);
      for (const auto& v : vs)
        for (const auto& w : t)
          if (reaches(g, v, w)) CHECK(t.contains(v));
    }
    const oracle::Dense d = oracle::dense(g);
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) CHECK(reaches(g, vs[i], vs[j]) == d.reach[i][j]);
  }
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(12);
  const std::vector<Cardinality> palette{Cardinality{1}, Cardinality{3}, Cardinality{1000},
                                         Cardinality::omega()};
  for (int round = 0; round < 200; ++round) {
    const Graph g = oracle::random_graph(rng, round % 7, 0.35, palette);
    CHECK(parse_graph(format_graph(g)) == g);
  }
}

TEST_CASE("vertex_simple_loops matches exhaustive cycle search") {
  std::mt19937_64 rng(13);
  const std::vector<Cardinality> palette{Cardinality{1}, Cardinality::omega()};
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 6, 0.35, palette);
    const oracle::Dense d = oracle::dense(g);
    const oracle::Bits within = std::uniform_int_distribution<oracle::Bits>(
        0, oracle::all_bits(d))(rng);
    std::vector<Loop> expected;
    for (const auto& c : oracle::cycles(d, within)) {
      std::vector<VertexId> names;
      for (int i : c) names.push_back(d.names[i]);
      expected.push_back(Loop::canonical(names));
    }
    std::sort(expected.begin(), expected.end());
    CHECK(vertex_simple_loops(g, oracle::set_of(d, within)) == expected);
  }
}

}  // TEST_SUITE
