#include "primspec/ideals.hpp"

#include <algorithm>
#include <set>

#include "primspec/errors.hpp"
#include "primspec/subsets.hpp"

namespace primspec {

std::string GaugeInvariantIdeal::to_string() const {
  return "(K=" + k_.to_string() + ", B=" + b_.to_string() + ")";
}

bool is_admissible(const Graph& g, const VertexSet& k, const VertexSet& b) {
  if (!is_hereditary(g, k) || !is_saturated(g, k)) return false;
  return b.is_subset_of(k_fin_inf(g, k));
}

GaugeInvariantIdeal GaugeInvariantIdeal::make(const Graph& g, VertexSet k,
                                              VertexSet b) {
  g.mask_of(k);
  g.mask_of(b);
  if (!is_hereditary(g, k))
    throw InadmissibleIdeal("K = " + k.to_string() + " is not hereditary");
  if (!is_saturated(g, k))
    throw InadmissibleIdeal("K = " + k.to_string() + " is not saturated");
  if (!b.is_subset_of(k_fin_inf(g, k)))
    throw InadmissibleIdeal("B = " + b.to_string() +
                            " is not contained in K^fin_inf = " +
                            k_fin_inf(g, k).to_string());
  return unchecked(std::move(k), std::move(b));
}

std::vector<GaugeInvariantIdeal> enumerate_gi_ideals(const Graph& g) {
  std::vector<GaugeInvariantIdeal> out;
  for (const VertexSet& k : enumerate_hs(g)) {
    const VertexSet kbad = k_fin_inf(g, k);
    const std::vector<VertexId>& bad = kbad.members();
    if (bad.size() > 30)
      throw ValidationError("too many candidate B sets for K = " + k.to_string());
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << bad.size()); ++bits) {
      std::vector<VertexId> b;
      for (std::size_t i = 0; i < bad.size(); ++i)
        if ((bits >> i) & 1) b.push_back(bad[i]);
      out.push_back(GaugeInvariantIdeal::unchecked(k, VertexSet(std::move(b))));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool gi_contains(const GaugeInvariantIdeal& smaller,
                 const GaugeInvariantIdeal& larger) {
  return smaller.k().is_subset_of(larger.k()) &&
         smaller.b().is_subset_of(larger.k() | larger.b());
}

GaugeInvariantIdeal gi_meet(const Graph& g,
                            const std::vector<GaugeInvariantIdeal>& family) {
  if (family.empty()) throw ValidationError("meet of an empty family");
  VertexSet k = family.front().k();
  VertexSet kb = family.front().k() | family.front().b();
  for (const auto& j : family) {
    k = k & j.k();
    kb = kb & (j.k() | j.b());
  }
  return GaugeInvariantIdeal::unchecked(k, kb & k_fin_inf(g, k));
}

GaugeInvariantIdeal mt_intersection_special(const Graph& g,
                                            const std::vector<MaximalTail>& y) {
  if (y.empty()) throw ValidationError("empty family of tau tails");
  VertexSet k = g.vertex_set();
  for (const MaximalTail& u : y) {
    if (!u.is_tau())
      throw ValidationError(u.vertices.to_string() + " is not a tau tail");
    k = k & omega(g, u.vertices);
  }
  VertexSet bad = k_fin_inf(g, k);
  return GaugeInvariantIdeal::unchecked(std::move(k), std::move(bad));
}

GaugeInvariantIdeal gamma_ideal(const Graph& g, const VertexSet& tail) {
  VertexSet k = omega(g, tail);
  VertexSet b = k_fin_inf(g, k);
  return GaugeInvariantIdeal::unchecked(std::move(k), std::move(b));
}

GaugeInvariantIdeal breaking_vertex_ideal(const Graph& g, std::string_view v) {
  g.index_of(v);
  VertexSet k = omega(g, VertexSet{VertexId(v)});
  VertexSet b = k_fin_inf(g, k) - VertexSet{VertexId(v)};
  return GaugeInvariantIdeal::unchecked(std::move(k), std::move(b));
}

PrimElements prim_elements(const Graph& g) {
  PrimElements out;
  for (MaximalTail& m : maximal_tails(g)) {
    if (m.is_tau()) {
      out.tau.push_back(std::move(m));
    } else {
      GaugeInvariantIdeal j = gamma_ideal(g, m.vertices);
      out.gamma.push_back({std::move(m), std::move(j)});
    }
  }
  for (const VertexId& v : breaking_vertices(g))
    out.breaking.push_back({v, breaking_vertex_ideal(g, v)});
  return out;
}

Sandwich sandwich(const Graph& g, const TailData& n) {
  if (!n.tail.is_tau())
    throw ValidationError(n.tail.vertices.to_string() + " is not a tau tail");
  return {gamma_ideal(g, n.tail.vertices),
          GaugeInvariantIdeal::unchecked(n.k_m, n.b_m)};
}

Sandwich sandwich(const Graph& g, const MaximalTail& n) {
  if (!n.is_tau())
    throw ValidationError(n.vertices.to_string() + " is not a tau tail");
  return sandwich(g, tail_data(g, n));
}

Graph quotient_graph(const Graph& g, const GaugeInvariantIdeal& j) {
  const GaugeInvariantIdeal checked = GaugeInvariantIdeal::make(g, j.k(), j.b());
  const VertexSet kept_beta = k_fin_inf(g, checked.k()) - checked.b();

  std::vector<VertexId> vertices;
  std::set<VertexId> taken(g.vertices().begin(), g.vertices().end());
  for (const VertexId& v : g.vertices())
    if (!checked.k().contains(v)) vertices.push_back(v);

  std::vector<std::pair<VertexId, VertexId>> beta;  // original, sink
  for (const VertexId& v : kept_beta) {
    VertexId name = "beta_" + v;
    while (taken.count(name)) name = "beta_" + name;
    taken.insert(name);
    vertices.push_back(name);
    beta.emplace_back(v, name);
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (checked.k().contains(e.dst)) continue;
    edges.push_back(e);
    for (const auto& [v, sink] : beta)
      if (e.dst == v) edges.push_back({e.src, sink, e.multiplicity});
  }
  return Graph(std::move(vertices), std::move(edges));
}

}  // namespace primspec
