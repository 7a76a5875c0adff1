#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "primspec/errors.hpp"
#include "primspec/subsets.hpp"
#include "primspec/tails.hpp"

using namespace primspec;

namespace {

MaximalTail tail_with(const Graph& g, const VertexSet& m) {
  for (const MaximalTail& t : maximal_tails(g))
    if (t.vertices == m) return t;
  FAIL("no such tail " << m.to_string());
  return {};
}

std::vector<Cardinality> full_palette() {
  return {Cardinality{1}, Cardinality{2}, Cardinality::omega()};
}

}  // namespace

TEST_SUITE("tails") {

TEST_CASE("maximal tails of the fixtures") {
  const auto t1 = maximal_tails(fixtures::e1());
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].vertices == VertexSet{"v"});
  CHECK(t1[0].kind() == TailKind::tau);
  CHECK(t1[0].loop->vertices == std::vector<VertexId>{"v"});
  CHECK(t1[1].vertices == VertexSet{"v", "w"});
  CHECK(t1[1].kind() == TailKind::gamma);

  const auto t2 = maximal_tails(fixtures::e2());
  REQUIRE(t2.size() == 3);
  CHECK(t2[0].vertices == VertexSet{"u"});
  CHECK(t2[0].is_tau());
  CHECK(t2[1].vertices == VertexSet{"u", "v"});
  CHECK_FALSE(t2[1].is_tau());
  CHECK(t2[2].vertices == VertexSet{"u", "v", "w"});
  CHECK(t2[2].is_tau());

  const auto t3 = maximal_tails(parse_graph("graph { vertices: a; }"));
  REQUIRE(t3.size() == 1);
  CHECK(t3[0].vertices == VertexSet{"a"});
  CHECK_FALSE(t3[0].is_tau());
  CHECK(maximal_tails(Graph{}).empty());
}

TEST_CASE("no_exit_loop") {
  const Graph g2 = fixtures::e2();
  CHECK(no_exit_loop(g2, VertexSet{"u", "v", "w"})->vertices == std::vector<VertexId>{"w"});
  CHECK_FALSE(no_exit_loop(g2, VertexSet{"u", "v"}).has_value());
  CHECK(no_exit_loop(fixtures::e1(), VertexSet{"v"})->vertices == std::vector<VertexId>{"v"});
  CHECK_THROWS_AS(no_exit_loop(g2, VertexSet{"w"}), ValidationError);
}

TEST_CASE("a loop edge of multiplicity two is an exit") {
  const Graph g = parse_graph("graph { vertices: a; edge a -> a [2]; }");
  const auto tails = maximal_tails(g);
  REQUIRE(tails.size() == 1);
  CHECK_FALSE(tails[0].is_tau());
}

TEST_CASE("a_count_is_finite") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  const MaximalTail m1 = tail_with(g1, VertexSet{"v"});
  CHECK(a_count_is_finite(g1, m1, "w"));
  CHECK(a_count(g1, m1, "w") == Cardinality{0});
  CHECK_THROWS_AS(a_count_is_finite(g1, m1, "v"), ValidationError);

  const MaximalTail m3 = tail_with(g2, VertexSet{"u", "v", "w"});
  CHECK_FALSE(a_count_is_finite(g2, m3, "v"));
  CHECK_FALSE(a_count_is_finite(g2, m3, "u"));
  CHECK(a_count(g2, m3, "v").is_omega());
  CHECK_THROWS_AS(a_count_is_finite(g2, tail_with(g2, VertexSet{"u", "v"}), "u"),
                  ValidationError);
}

TEST_CASE("a_count counts weighted paths") {
  // Two routes from a to the loop at d: a->b->d (2*1) and a->c->d (1*3).
  const Graph g = parse_graph(
      "graph { vertices: a, b, c, d; edge a -> b [2]; edge a -> c; edge b -> d;"
      " edge c -> d [3]; edge d -> d; }");
  const MaximalTail m = tail_with(g, g.vertex_set());
  REQUIRE(m.is_tau());
  CHECK(a_count(g, m, "a") == Cardinality{5});
  CHECK(a_count(g, m, "b") == Cardinality{1});
}

TEST_CASE("tail_data") {
  const Graph g1 = fixtures::e1(), g2 = fixtures::e2();
  const TailData d1 = tail_data(g1, tail_with(g1, VertexSet{"v"}));
  CHECK(d1.k_m == VertexSet{"v", "w"});
  CHECK(d1.b_m.empty());

  const TailData d3 = tail_data(g2, tail_with(g2, VertexSet{"u", "v", "w"}));
  CHECK(d3.k_m == VertexSet{"w"});
  CHECK(d3.b_m.empty());

  const TailData d2 = tail_data(g2, tail_with(g2, VertexSet{"u", "v"}));
  CHECK(d2.m_inf_empty == VertexSet{"v"});
  CHECK(d2.k_m.empty());
  CHECK(d2.b_m.empty());
}

TEST_CASE("breaking_vertices") {
  CHECK(breaking_vertices(fixtures::e1()) == VertexSet{"v"});
  CHECK(breaking_vertices(fixtures::e2()).empty());
  CHECK(breaking_vertices(parse_graph("graph { vertices: a, b; edge a -> b [7]; edge b -> a; }"))
            .empty());
}

TEST_CASE("tails agree with the literal definition") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 6, 0.3, full_palette());
    const oracle::Dense d = oracle::dense(g);
    std::vector<VertexSet> expected;
    for (oracle::Bits m : oracle::maximal_tails(d)) expected.push_back(oracle::set_of(d, m));
    std::sort(expected.begin(), expected.end());
    std::vector<VertexSet> got;
    for (const MaximalTail& t : maximal_tails(g)) {
      got.push_back(t.vertices);
      CHECK(is_maximal_tail(g, t.vertices));
    }
    CHECK(got == expected);
    for (oracle::Bits m = 0; m <= oracle::all_bits(d); ++m) {
      const VertexSet ms = oracle::set_of(d, m);
      CHECK(is_maximal_tail(g, ms) ==
            (std::find(expected.begin(), expected.end(), ms) != expected.end()));
    }
  }
}

TEST_CASE("loops are exitless and unique") {
  std::mt19937_64 rng(32);
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 6, 0.35, full_palette());
    const oracle::Dense d = oracle::dense(g);
    for (const MaximalTail& t : maximal_tails(g)) {
      const auto exitless = oracle::exitless_cycles(d, oracle::bits_of(d, t.vertices));
      REQUIRE(exitless.size() <= 1);
      CHECK(t.is_tau() == (exitless.size() == 1));
      if (!t.is_tau()) continue;
      std::vector<VertexId> names;
      for (int i : exitless.front()) names.push_back(d.names[i]);
      CHECK(*t.loop == Loop::canonical(names));
      CHECK(t.loop->vertex_set().is_subset_of(t.vertices));
      CHECK(omega(g, t.vertices) == omega(g, t.loop->vertex_set()));
    }
  }
}

TEST_CASE("tail data agrees with brute force") {
  std::mt19937_64 rng(33);
  for (int round = 0; round < 300; ++round) {
    const Graph g = oracle::random_graph(rng, 1 + round % 6, 0.3, full_palette());
    const oracle::Dense d = oracle::dense(g);
    const VertexSet bv = breaking_vertices(g);
    CHECK(bv == oracle::set_of(d, oracle::breaking_vertices(d)));
    if (is_row_finite(g)) CHECK(bv.empty());
    for (const MaximalTail& t : maximal_tails(g)) {
      const TailData td = tail_data(g, t);
      const VertexSet om = omega(g, t.vertices);
      CHECK(td.m_inf_empty.size() <= 1);
      CHECK(td.m_inf_empty == (k_inf_empty(g, om) & t.vertices));
      if (!t.is_tau()) continue;

      const oracle::Bits m = oracle::bits_of(d, t.vertices);
      const oracle::Bits loop = oracle::bits_of(d, t.loop->vertex_set());
      for (int v = 0; v < d.n; ++v) {
        if (oracle::has(loop, v)) continue;
        const Cardinality expected = oracle::a_count(d, loop, v);
        CHECK(a_count_is_finite(g, t, d.names[v]) == expected.is_finite());
        CHECK(a_count(g, t, d.names[v]) == expected);
      }
      const oracle::Bits km = oracle::k_m(d, loop);
      CHECK(td.k_m == oracle::set_of(d, km));
      CHECK(td.b_m == oracle::set_of(d, oracle::b_m(d, m, km)));
      CHECK(td.b_m == (k_fin_inf(g, td.k_m) & k_fin_inf(g, om)));

      CHECK(is_hereditary(g, td.k_m));
      CHECK(is_saturated(g, td.k_m));
      CHECK((om | t.loop->vertex_set()).is_subset_of(td.k_m));
      const VertexSet lower = shc(g, om | t.loop->vertex_set());
      CHECK(lower.is_subset_of(td.k_m));
      if (is_row_finite(g)) CHECK(lower == td.k_m);
    }
  }
}

}  // TEST_SUITE
