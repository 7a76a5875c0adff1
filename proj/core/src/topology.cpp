#include "primspec/topology.hpp"

#include <algorithm>

#include "primspec/errors.hpp"
#include "primspec/subsets.hpp"

namespace primspec {

void PrimSubset::normalize() {
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  std::erase_if(circle, [](const auto& kv) { return kv.second.is_empty(); });
}

bool PrimSubset::contains(const PrimIdeal& p) const {
  if (const auto* t = std::get_if<GaugeTail>(&p))
    return std::find(gamma.begin(), gamma.end(), t->tail) != gamma.end();
  if (const auto* b = std::get_if<BreakingVertex>(&p)) return bv.contains(b->vertex);
  const auto& c = std::get<Circle>(p);
  auto it = circle.find(c.tail);
  return it != circle.end() && it->second.contains(c.t);
}

bool PrimSubset::is_subset_of(const PrimSubset& other) const {
  for (const VertexSet& m : gamma)
    if (std::find(other.gamma.begin(), other.gamma.end(), m) == other.gamma.end())
      return false;
  if (!bv.is_subset_of(other.bv)) return false;
  for (const auto& [n, d] : circle) {
    auto it = other.circle.find(n);
    if (d.is_empty()) continue;
    if (it == other.circle.end() || !d.is_subset_of(it->second)) return false;
  }
  return true;
}

PrimSubset operator|(const PrimSubset& a, const PrimSubset& b) {
  PrimSubset out = a;
  out.gamma.insert(out.gamma.end(), b.gamma.begin(), b.gamma.end());
  out.bv = out.bv | b.bv;
  for (const auto& [n, d] : b.circle) out.circle[n] = out.circle[n] | d;
  out.normalize();
  return out;
}

void validate(const PrimSpace& space, const PrimSubset& s) {
  for (const VertexSet& m : s.gamma) space.validate(GaugeTail{m});
  for (const VertexId& v : s.bv) space.validate(BreakingVertex{v});
  for (const auto& [n, d] : s.circle) space.validate(Circle{n, CirclePoint{}});
}

PrimSubset singleton(const PrimIdeal& p) {
  PrimSubset s;
  if (const auto* t = std::get_if<GaugeTail>(&p)) {
    s.gamma.push_back(t->tail);
  } else if (const auto* b = std::get_if<BreakingVertex>(&p)) {
    s.bv.insert(b->vertex);
  } else {
    const auto& c = std::get<Circle>(p);
    s.circle[c.tail] = CircleSet::point(c.t);
  }
  return s;
}

namespace {

using Mask = Graph::Mask;

struct IndexOrder {
  std::vector<std::size_t> min;
  std::vector<std::size_t> inf;
};

IndexOrder tau_order_indices(const PrimSpace& space,
                             const std::vector<std::size_t>& y) {
  IndexOrder out;
  for (std::size_t u : y) {
    const bool minimal = std::none_of(y.begin(), y.end(), [&](std::size_t w) {
      return w != u && space.loop_reaches(u, w);
    });
    if (minimal) out.min.push_back(u);
  }
  for (std::size_t u : y) {
    const bool inf = std::none_of(out.min.begin(), out.min.end(), [&](std::size_t v) {
      return space.loop_reaches(u, v);
    });
    if (inf) out.inf.push_back(u);
  }
  return out;
}

bool subset(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

// ∪ of the members, ∩ of their Ω-sets, and the B-part of the intersection
// of their gauge ideals, for a non-empty family.
struct FamilyMasks {
  Mask unite;
  Mask meet;
  Mask bad;
};

bool disjoint(const Mask& a, const Mask& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

class ClosureContext {
 public:
  explicit ClosureContext(const PrimSpace& space) : g_(space.graph()) {
    for (const TailData& d : space.tails()) {
      Mask m = g_.mask_of(d.tail.vertices);
      Mask om = detail::omega(g_, m);
      Mask b = detail::k_fin_inf(g_, om);
      for (std::size_t v = 0; v < g_.size(); ++v) b[v] = b[v] || om[v];
      omegas_.push_back(std::move(om));
      kb_.push_back(std::move(b));
      inf_empty_.push_back(g_.mask_of(d.m_inf_empty));
      tails_.push_back(std::move(m));
    }
  }

  FamilyMasks of_tails(const std::vector<std::size_t>& family) const {
    const std::size_t n = g_.size();
    FamilyMasks f{Mask(n, 0), Mask(n, 1), Mask(n, 1)};
    for (std::size_t i : family) {
      for (std::size_t v = 0; v < n; ++v) {
        f.unite[v] = f.unite[v] || tails_[i][v];
        f.meet[v] = f.meet[v] && omegas_[i][v];
        f.bad[v] = f.bad[v] && kb_[i][v];
      }
    }
    finish(f);
    return f;
  }

  FamilyMasks of_breaking(const std::vector<std::size_t>& family) const {
    const std::size_t n = g_.size();
    FamilyMasks f{Mask(n, 0), Mask(n, 1), Mask(n, 1)};
    for (std::size_t w : family) {
      Mask single(n, 0);
      single[w] = 1;
      const Mask om = detail::omega(g_, single);
      const Mask fin = detail::k_fin_inf(g_, om);
      for (std::size_t v = 0; v < n; ++v) {
        f.meet[v] = f.meet[v] && om[v];
        f.bad[v] = f.bad[v] && (om[v] || (fin[v] && v != w));
      }
    }
    for (std::size_t v = 0; v < n; ++v) f.unite[v] = !f.meet[v];
    finish(f);
    return f;
  }

  // The gauge ideal of gamma tail i contains the family's intersection:
  // Ω(M) ⊇ K, and no vertex of M_∞^∅ lies in B.
  bool gamma_hit(std::size_t i, const FamilyMasks& f) const {
    return subset(tails_[i], f.unite) && disjoint(inf_empty_[i], f.bad);
  }
  bool bv_hit(std::size_t v, const FamilyMasks& f) const {
    return f.unite[v] && !f.bad[v];
  }
  bool tau_hit(std::size_t i, const FamilyMasks& f) const {
    return subset(tails_[i], f.unite);
  }

  const Graph& graph() const { return g_; }

 private:
  const Graph& g_;
  std::vector<Mask> tails_;
  std::vector<Mask> omegas_;
  std::vector<Mask> kb_;  // Ω(M) ∪ Ω(M)^fin_∞
  std::vector<Mask> inf_empty_;

  void finish(FamilyMasks& f) const {
    const Mask kbad = detail::k_fin_inf(g_, f.meet);
    for (std::size_t v = 0; v < g_.size(); ++v) f.bad[v] = f.bad[v] && kbad[v];
  }
};

}  // namespace

TauOrder tau_order(const PrimSpace& space, const std::vector<VertexSet>& y) {
  std::vector<std::size_t> idx;
  for (const VertexSet& u : y) {
    const std::size_t i = space.tail_index(u);
    if (!space.tails()[i].tail.is_tau())
      throw ValidationError(u.to_string() + " is not a tau tail");
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  const IndexOrder order = tau_order_indices(space, idx);
  TauOrder out;
  for (std::size_t i : order.min) out.y_min.push_back(space.tails()[i].tail.vertices);
  for (std::size_t i : order.inf) out.y_inf.push_back(space.tails()[i].tail.vertices);
  return out;
}

TauOrder tau_order(const Graph& g, const std::vector<VertexSet>& y) {
  return tau_order(PrimSpace(g), y);
}

PrimSubset closure(const PrimSpace& space, const PrimSubset& s) {
  validate(space, s);
  const Graph& g = space.graph();
  const std::size_t n = g.size();
  const ClosureContext ctx(space);

  Mask gamma_in(space.tails().size(), 0);
  Mask bv_in(n, 0);
  std::vector<bool> tau_all(space.tails().size(), false);
  std::map<std::size_t, CircleSet> tau_part;

  std::vector<std::size_t> bv_idx;
  for (const VertexId& v : space.breaking_vertices()) bv_idx.push_back(g.index_of(v));

  // X part.
  if (!s.gamma.empty()) {
    std::vector<std::size_t> x;
    for (const VertexSet& m : s.gamma) x.push_back(space.tail_index(m));
    const FamilyMasks f = ctx.of_tails(x);
    for (std::size_t i : space.gamma_indices()) {
      const bool member = std::find(x.begin(), x.end(), i) != x.end();
      if (member || ctx.gamma_hit(i, f)) gamma_in[i] = 1;
    }
    for (std::size_t v : bv_idx)
      if (ctx.bv_hit(v, f)) bv_in[v] = 1;
    for (std::size_t i : space.tau_indices())
      if (ctx.tau_hit(i, f)) tau_all[i] = true;
  }

  // W part. E⁰ \ ∩Ω(w) plays the role of ∪X.
  if (!s.bv.empty()) {
    std::vector<std::size_t> w;
    for (const VertexId& v : s.bv) w.push_back(g.index_of(v));
    const FamilyMasks f = ctx.of_breaking(w);
    for (std::size_t i : space.gamma_indices())
      if (ctx.gamma_hit(i, f)) gamma_in[i] = 1;
    for (std::size_t v : bv_idx)
      if (s.bv.contains(g.name(v)) || ctx.bv_hit(v, f)) bv_in[v] = 1;
    for (std::size_t i : space.tau_indices())
      if (ctx.tau_hit(i, f)) tau_all[i] = true;
  }

  // Y part.
  std::vector<std::size_t> y;
  for (const auto& [m, d] : s.circle)
    if (!d.is_empty()) y.push_back(space.tail_index(m));
  std::sort(y.begin(), y.end());
  if (!y.empty()) {
    const IndexOrder order = tau_order_indices(space, y);
    std::vector<FamilyMasks> families;
    if (!order.inf.empty()) families.push_back(ctx.of_tails(order.inf));
    const FamilyMasks fmin = ctx.of_tails(order.min);
    families.push_back(fmin);

    for (const FamilyMasks& f : families) {
      for (std::size_t i : space.gamma_indices())
        if (ctx.gamma_hit(i, f)) gamma_in[i] = 1;
      for (std::size_t v : bv_idx)
        if (ctx.bv_hit(v, f)) bv_in[v] = 1;
    }
    for (std::size_t i : space.tau_indices()) {
      const bool in_min =
          std::find(order.min.begin(), order.min.end(), i) != order.min.end();
      const bool by_inf = !order.inf.empty() && ctx.tau_hit(i, families.front());
      if (by_inf || (!in_min && ctx.tau_hit(i, fmin))) {
        tau_all[i] = true;
      } else if (in_min) {
        tau_part[i] = circle_closure(s.circle.at(space.tails()[i].tail.vertices));
      }
    }
  }

  PrimSubset out;
  for (std::size_t i : space.gamma_indices())
    if (gamma_in[i]) out.gamma.push_back(space.tails()[i].tail.vertices);
  for (std::size_t v : bv_idx)
    if (bv_in[v]) out.bv.insert(g.name(v));
  for (std::size_t i : space.tau_indices()) {
    const VertexSet& m = space.tails()[i].tail.vertices;
    if (tau_all[i]) {
      out.circle[m] = CircleSet::all();
    } else if (auto it = tau_part.find(i); it != tau_part.end()) {
      out.circle[m] = it->second;
    }
  }
  out.normalize();
  return out;
}

PrimSubset closure(const Graph& g, const PrimSubset& s) {
  return closure(PrimSpace(g), s);
}

bool oracle_closure_member(const PrimSpace& space, const PrimSubset& s,
                           const PrimIdeal& j) {
  validate(space, s);
  space.validate(j);
  const Graph& g = space.graph();

  std::vector<GaugeInvariantIdeal> gauge;
  for (const VertexSet& m : s.gamma) gauge.push_back(gamma_ideal(g, m));
  for (const VertexId& v : s.bv) gauge.push_back(breaking_vertex_ideal(g, v));

  // R_{U,t} ⊂ J_{Ω(N),Ω(N)^fin_∞} ⊂ R_{N,z} whenever L_N reaches L_U, so
  // only tails whose loop reaches no other loop of Y contribute.
  std::vector<std::size_t> y;
  for (const auto& [m, d] : s.circle)
    if (!d.is_empty()) y.push_back(space.tail_index(m));
  std::vector<std::pair<std::size_t, CircleSet>> circles;
  for (std::size_t u : y) {
    const bool dominated = std::any_of(y.begin(), y.end(), [&](std::size_t w) {
      return w != u && space.loop_reaches(u, w);
    });
    if (dominated) continue;
    CircleSet c = circle_closure(s.circle.at(space.tails()[u].tail.vertices));
    // ∩_{t∈𝕋} R_{U,t} is the lower sandwich bound.
    if (c.is_all()) {
      gauge.push_back(space.sandwich(u).lower);
    } else {
      circles.emplace_back(u, std::move(c));
    }
  }
  if (gauge.empty() && circles.empty()) return false;

  const auto* circle_j = std::get_if<Circle>(&j);
  const std::size_t j_tail = circle_j ? space.tail_index(circle_j->tail) : 0;
  // The largest gauge-invariant ideal inside J.
  const GaugeInvariantIdeal j_gauge =
      circle_j ? space.sandwich(j_tail).lower : space.gauge_ideal(j);

  if (!gauge.empty() && gi_contains(gi_meet(g, gauge), j_gauge)) return true;
  for (const auto& [u, c] : circles) {
    if (circle_j) {
      if (j_tail == u ? c.contains(circle_j->t) : space.loop_reaches(j_tail, u))
        return true;
    } else if (gi_contains(space.sandwich(u).upper, j_gauge)) {
      return true;
    }
  }
  return false;
}

std::vector<PrimNode> prim_nodes(const PrimSpace& space) {
  std::vector<PrimNode> out;
  for (std::size_t i : space.gamma_indices())
    out.emplace_back(GaugeTail{space.tails()[i].tail.vertices});
  for (const VertexId& v : space.breaking_vertices())
    out.emplace_back(BreakingVertex{v});
  for (std::size_t i : space.tau_indices())
    out.emplace_back(CircleFamily{space.tails()[i].tail.vertices});
  return out;
}

std::vector<OrderPair> specialization_order(const PrimSpace& space) {
  const std::vector<PrimNode> nodes = prim_nodes(space);
  const CirclePoint probe{};
  std::vector<OrderPair> out;
  for (const PrimNode& from : nodes) {
    PrimSubset s;
    if (const auto* t = std::get_if<GaugeTail>(&from)) {
      s = singleton(*t);
    } else if (const auto* b = std::get_if<BreakingVertex>(&from)) {
      s = singleton(*b);
    } else {
      s = singleton(Circle{std::get<CircleFamily>(from).tail, probe});
    }
    const PrimSubset c = closure(space, s);
    for (const PrimNode& to : nodes) {
      if (const auto* t = std::get_if<GaugeTail>(&to)) {
        if (c.contains(*t)) out.push_back({from, to, false});
      } else if (const auto* b = std::get_if<BreakingVertex>(&to)) {
        if (c.contains(*b)) out.push_back({from, to, false});
      } else {
        const VertexSet& n = std::get<CircleFamily>(to).tail;
        auto it = c.circle.find(n);
        if (it == c.circle.end()) continue;
        if (it->second.is_all()) {
          out.push_back({from, to, false});
        } else if (from == to && it->second == CircleSet::point(probe)) {
          out.push_back({from, to, true});
        } else {
          throw InternalInconsistency("closure of a singleton meets " +
                                      n.to_string() + " in " +
                                      it->second.to_string());
        }
      }
    }
  }
  return out;
}

bool is_simple(const Graph& g) {
  if (g.empty()) throw ValidationError("simplicity is undefined for the empty graph");
  const std::vector<MaximalTail> tails = maximal_tails(g);
  return tails.size() == 1 && !tails.front().is_tau() &&
         tails.front().vertices == g.vertex_set() && breaking_vertices(g).empty();
}

}  // namespace primspec
