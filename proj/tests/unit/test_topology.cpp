#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "primspec/errors.hpp"
#include "primspec/json_io.hpp"
#include "primspec/topology.hpp"

using namespace primspec;

namespace {

const VertexSet e1_all{"v", "w"};
const VertexSet m1{"u"}, m2{"u", "v"}, m3{"u", "v", "w"};

PrimSubset subset(std::vector<VertexSet> gamma, VertexSet bv,
                  std::map<VertexSet, CircleSet> circle) {
  PrimSubset s{std::move(gamma), std::move(bv), std::move(circle)};
  s.normalize();
  return s;
}

CircleSet cs(const char* text) { return CircleSet::parse(text); }

// Every member of Prim that the probe points can tell apart.
std::vector<PrimIdeal> probe_members(const PrimSpace& space, const PrimSubset& s) {
  std::vector<PrimIdeal> out;
  for (std::size_t i : space.gamma_indices()) out.push_back(GaugeTail{space.tails()[i].tail.vertices});
  for (const VertexId& v : space.breaking_vertices()) out.push_back(BreakingVertex{v});
  const auto pts = oracle::probes(s);
  for (std::size_t i : space.tau_indices())
    for (const CirclePoint& t : pts) out.push_back(Circle{space.tails()[i].tail.vertices, t});
  return out;
}

std::vector<Cardinality> full_palette() {
  return {Cardinality{1}, Cardinality{2}, Cardinality::omega()};
}

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("PrimSubset basics") {
  PrimSubset s = subset({m3, m2, m2}, {}, {{m1, CircleSet{}}, {m3, cs("point:1/2")}});
  CHECK(s.gamma == std::vector<VertexSet>{m2, m3});
  CHECK(s.circle.size() == 1);
  CHECK(s.contains(Circle{m3, CirclePoint(Rational(1, 2))}));
  CHECK_FALSE(s.contains(Circle{m3, CirclePoint(Rational(0))}));
  CHECK(s.contains(GaugeTail{m2}));
  CHECK_FALSE(s.contains(BreakingVertex{"v"}));
  const PrimSubset t = subset({}, {"v"}, {{m3, cs("arc:(0,1/2)")}});
  const PrimSubset u = s | t;
  CHECK(s.is_subset_of(u));
  CHECK(t.is_subset_of(u));
  CHECK(u.circle.at(m3) == cs("arc:(0,1/2]"));
  CHECK(PrimSubset{}.empty());
  CHECK(singleton(BreakingVertex{"v"}) == subset({}, {"v"}, {}));
}

TEST_CASE("validate rejects foreign members") {
  const PrimSpace space(fixtures::e2());
  CHECK_NOTHROW(validate(space, subset({m2}, {}, {{m1, CircleSet::all()}})));
  CHECK_THROWS_AS(validate(space, subset({m1}, {}, {})), ValidationError);
  CHECK_THROWS_AS(validate(space, subset({}, {"v"}, {})), ValidationError);
  CHECK_THROWS_AS(validate(space, subset({}, {}, {{m2, CircleSet::all()}})), ValidationError);
  CHECK_THROWS_AS(validate(space, subset({}, {}, {{VertexSet{"w"}, CircleSet::all()}})),
                  ValidationError);
}

TEST_CASE("tau_order") {
  const Graph g2 = fixtures::e2();
  // The loop at u reaches the loop at w, so only M3 is minimal.
  CHECK(tau_order(g2, {m1, m3}) == TauOrder{{m3}, {}});
  CHECK(tau_order(g2, {}) == TauOrder{});
  CHECK(tau_order(g2, {m1}) == TauOrder{{m1}, {}});
  CHECK(tau_order(g2, {m3}) == TauOrder{{m3}, {}});
  CHECK_THROWS_AS(tau_order(g2, {m2}), ValidationError);
}

TEST_CASE("closure on E1") {
  const PrimSpace space(fixtures::e1());
  const VertexSet m{"v"};
  const PrimSubset everything = subset({e1_all}, {"v"}, {{m, CircleSet::all()}});
  CHECK(closure(space, subset({e1_all}, {}, {})) == everything);
  CHECK(closure(space, subset({}, {"v"}, {})) == subset({}, {"v"}, {{m, CircleSet::all()}}));
  CHECK(closure(space, PrimSubset{}) == PrimSubset{});
  for (const char* d : {"point:1/3", "arc:(0,1/2)", "T", "arc:(3/4,1/4],point:1/2"}) {
    CHECK(closure(space, subset({}, {}, {{m, cs(d)}})) ==
          subset({}, {}, {{m, circle_closure(cs(d))}}));
  }
}

TEST_CASE("closure on E2") {
  const PrimSpace space(fixtures::e2());
  CHECK(closure(space, subset({m2}, {}, {})) == subset({m2}, {}, {{m1, CircleSet::all()}}));
  CHECK(closure(space, subset({}, {}, {{m3, cs("arc:(0,1/2)")}})) ==
        subset({m2}, {}, {{m1, CircleSet::all()}, {m3, cs("arc:[0,1/2]")}}));
  CHECK(closure(space, subset({}, {}, {{m1, cs("arc:(0,1/2)")}})) ==
        subset({}, {}, {{m1, cs("arc:[0,1/2]")}}));
  CHECK(closure(fixtures::e2(), PrimSubset{}) == PrimSubset{});
}

TEST_CASE("a vertex sending infinitely many edges both into and out of K") {
  // J({c}, ∅) ⊆ J({a,c}, ∅) puts {b} in the closure of {a,b}, although b
  // sends infinitely many edges into c.
  const PrimSpace s1(parse_graph(
      "graph { vertices: a, b, c; edge b -> a [inf]; edge b -> c [inf]; edge c -> c [inf]; }"));
  const PrimSubset x = subset({VertexSet{"a", "b"}}, {}, {});
  CHECK(closure(s1, x) == subset({VertexSet{"b"}, VertexSet{"a", "b"}}, {}, {}));
  CHECK(oracle_closure_member(s1, x, GaugeTail{VertexSet{"b"}}));

  // The same situation for a breaking vertex.
  const PrimSpace s2(parse_graph(
      "graph { vertices: a, c, v; edge v -> v; edge v -> a [inf]; edge v -> c [inf]; }"));
  const PrimSubset y = subset({VertexSet{"a", "v"}}, {}, {});
  CHECK(closure(s2, y) == subset({VertexSet{"a", "v"}}, {"v"}, {{VertexSet{"v"}, CircleSet::all()}}));
  CHECK(oracle_closure_member(s2, y, BreakingVertex{"v"}));
}

TEST_CASE("oracle_closure_member") {
  const PrimSpace space(fixtures::e2());
  const CirclePoint third(Rational(1, 3));
  CHECK(oracle_closure_member(space, subset({m2}, {}, {}), Circle{m1, third}));
  CHECK_FALSE(oracle_closure_member(space, subset({}, {}, {{m1, CircleSet::all()}}),
                                    GaugeTail{m2}));
  CHECK_FALSE(closure(space, subset({}, {}, {{m1, CircleSet::all()}})).contains(GaugeTail{m2}));
  const PrimSubset s = subset({}, {}, {{m3, cs("point:1/3")}});
  CHECK(oracle_closure_member(space, s, Circle{m3, third}));
  CHECK_FALSE(oracle_closure_member(space, s, Circle{m3, CirclePoint(Rational(1, 2))}));
  CHECK_FALSE(oracle_closure_member(space, PrimSubset{}, GaugeTail{m2}));
}

TEST_CASE("specialization order") {
  const PrimSpace s1(fixtures::e1());
  const GaugeTail top{e1_all};
  const BreakingVertex bv{"v"};
  const CircleFamily fam{VertexSet{"v"}};
  CHECK(prim_nodes(s1) == std::vector<PrimNode>{top, bv, fam});
  CHECK(specialization_order(s1) == std::vector<OrderPair>{
                                        {top, top, false}, {top, bv, false}, {top, fam, false},
                                        {bv, bv, false}, {bv, fam, false}, {fam, fam, true}});

  const PrimSpace s2(fixtures::e2());
  const GaugeTail g2{m2};
  const CircleFamily f1{m1}, f3{m3};
  CHECK(specialization_order(s2) == std::vector<OrderPair>{{g2, g2, false},
                                                           {g2, f1, false},
                                                           {f1, f1, true},
                                                           {f3, g2, false},
                                                           {f3, f1, false},
                                                           {f3, f3, true}});

  const PrimSpace s3(parse_graph("graph { vertices: a; }"));
  const GaugeTail a{VertexSet{"a"}};
  CHECK(specialization_order(s3) == std::vector<OrderPair>{{a, a, false}});
}

TEST_CASE("is_simple") {
  CHECK_FALSE(is_simple(fixtures::e1()));
  CHECK_FALSE(is_simple(fixtures::e2()));
  CHECK_FALSE(is_simple(parse_graph("graph { vertices: a; edge a -> a; }")));
  CHECK(is_simple(parse_graph("graph { vertices: a, b; edge a -> b [2]; edge b -> a; }")));
  CHECK(is_simple(parse_graph("graph { vertices: a; }")));
  CHECK_THROWS_AS(is_simple(Graph{}), ValidationError);
}

TEST_CASE("closure is a Kuratowski closure operator") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 150; ++round) {
    const PrimSpace space(oracle::random_graph(rng, 1 + round % 5, 0.35, full_palette()));
    CHECK(closure(space, PrimSubset{}) == PrimSubset{});
    for (int k = 0; k < 8; ++k) {
      const PrimSubset a = oracle::random_subset(rng, space);
      const PrimSubset b = oracle::random_subset(rng, space);
      const PrimSubset ca = closure(space, a);
      INFO(format_graph(space.graph()));
      INFO(json::to_json(space, a).dump() << " | " << json::to_json(space, b).dump());
      INFO(json::to_json(space, closure(space, a | b)).dump() << " vs " << json::to_json(space, ca | closure(space, b)).dump());
      CHECK(a.is_subset_of(ca));
      CHECK(closure(space, ca) == ca);
      CHECK(closure(space, a | b) == (ca | closure(space, b)));
    }
  }
}

TEST_CASE("closure agrees with the prime-factor oracle") {
  std::mt19937_64 rng(62);
  for (int round = 0; round < 150; ++round) {
    const PrimSpace space(oracle::random_graph(rng, 1 + round % 5, 0.35, full_palette()));
    for (int k = 0; k < 6; ++k) {
      const PrimSubset s = oracle::random_subset(rng, space);
      const PrimSubset c = closure(space, s);
      INFO(format_graph(space.graph()));
      INFO(json::to_json(space, s).dump() << " -> " << json::to_json(space, c).dump());
      for (const PrimIdeal& j : probe_members(space, s)) {
        INFO(to_string(space, j));
        CHECK(c.contains(j) == oracle_closure_member(space, s, j));
      }
    }
  }
}

TEST_CASE("row-finite graphs follow the four-case rule") {
  std::mt19937_64 rng(63);
  const std::vector<Cardinality> palette{Cardinality{1}, Cardinality{2}};
  for (int round = 0; round < 150; ++round) {
    const PrimSpace space(oracle::random_graph(rng, 1 + round % 5, 0.35, palette));
    CHECK(space.breaking_vertices().empty());
    for (int k = 0; k < 6; ++k) {
      const PrimSubset s = oracle::random_subset(rng, space);
      const PrimSubset c = closure(space, s);
      for (const PrimIdeal& j : probe_members(space, s))
        CHECK(c.contains(j) == oracle::row_finite_member(space, s, j));
    }
  }
}

TEST_CASE("points are distinguished and circle points are closed in their family") {
  std::mt19937_64 rng(64);
  for (int round = 0; round < 150; ++round) {
    const PrimSpace space(oracle::random_graph(rng, 1 + round % 5, 0.35, full_palette()));
    std::vector<PrimIdeal> pts;
    for (std::size_t i : space.gamma_indices()) pts.push_back(GaugeTail{space.tails()[i].tail.vertices});
    for (const VertexId& v : space.breaking_vertices()) pts.push_back(BreakingVertex{v});
    for (std::size_t i : space.tau_indices())
      for (const Rational& r : {Rational(0), Rational(1, 3)})
        pts.push_back(Circle{space.tails()[i].tail.vertices, CirclePoint(r)});
    std::vector<PrimSubset> closures;
    for (const PrimIdeal& p : pts) closures.push_back(closure(space, singleton(p)));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK(closures[i] != closures[j]);
      if (const auto* c = std::get_if<Circle>(&pts[i]))
        CHECK(closures[i].circle.at(c->tail) == CircleSet::point(c->t));
    }
  }
}

}  // TEST_SUITE
