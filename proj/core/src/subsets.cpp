#include "primspec/subsets.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "primspec/errors.hpp"

namespace primspec {
namespace detail {

Cardinality out_into(const Graph& g, std::size_t v, const Graph::Mask& s) {
  Cardinality total;
  for (const auto& a : g.out_arcs(v))
    if (s[a.target]) total += a.multiplicity;
  return total;
}

void hereditary_close(const Graph& g, Graph::Mask& m) {
  const std::size_t n = g.size();
  Graph::Mask seed = m;
  for (std::size_t v = 0; v < n; ++v) {
    if (!seed[v]) continue;
    for (std::size_t w = 0; w < n; ++w)
      if (g.reaches(v, w)) m[w] = 1;
  }
}

void saturate(const Graph& g, Graph::Mask& m) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (m[v]) continue;
      const Cardinality out = g.out_cardinality(v);
      if (out.is_zero() || out.is_omega()) continue;
      const bool all_inside =
          std::all_of(g.out_arcs(v).begin(), g.out_arcs(v).end(),
                      [&](const Graph::Arc& a) { return m[a.target] != 0; });
      if (all_inside) {
        m[v] = 1;
        changed = true;
      }
    }
  }
}

void shc(const Graph& g, Graph::Mask& m) {
  // Saturating a hereditary set keeps it hereditary: a vertex added by
  // saturation only points into the set.
  hereditary_close(g, m);
  saturate(g, m);
}

Graph::Mask omega(const Graph& g, const Graph::Mask& x) {
  const std::size_t n = g.size();
  Graph::Mask out(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    if (x[w]) continue;
    bool reaches_x = false;
    for (std::size_t v = 0; v < n && !reaches_x; ++v)
      reaches_x = x[v] && g.reaches(w, v);
    out[w] = !reaches_x;
  }
  return out;
}

Graph::Mask k_fin_inf(const Graph& g, const Graph::Mask& k) {
  const std::size_t n = g.size();
  Graph::Mask out(n, 0);
  Graph::Mask outside(n, 0);
  for (std::size_t v = 0; v < n; ++v) outside[v] = !k[v];
  for (std::size_t v = 0; v < n; ++v) {
    if (k[v] || g.out_cardinality(v).is_finite()) continue;
    const Cardinality leaving = out_into(g, v, outside);
    out[v] = leaving.is_finite() && !leaving.is_zero();
  }
  return out;
}

Graph::Mask k_inf_empty(const Graph& g, const Graph::Mask& k) {
  const std::size_t n = g.size();
  Graph::Mask out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (k[v] || g.out_cardinality(v).is_finite()) continue;
    out[v] = std::all_of(g.out_arcs(v).begin(), g.out_arcs(v).end(),
                         [&](const Graph::Arc& a) { return k[a.target] != 0; });
  }
  return out;
}

}  // namespace detail

bool is_hereditary(const Graph& g, const VertexSet& k) {
  Graph::Mask m = g.mask_of(k);
  const Graph::Mask before = m;
  detail::hereditary_close(g, m);
  return m == before;
}

bool is_saturated(const Graph& g, const VertexSet& k) {
  Graph::Mask m = g.mask_of(k);
  const Graph::Mask before = m;
  detail::saturate(g, m);
  return m == before;
}

VertexSet saturate(const Graph& g, const VertexSet& x) {
  Graph::Mask m = g.mask_of(x);
  detail::saturate(g, m);
  return g.set_of(m);
}

VertexSet shc(const Graph& g, const VertexSet& x) {
  Graph::Mask m = g.mask_of(x);
  detail::shc(g, m);
  return g.set_of(m);
}

VertexSet omega(const Graph& g, const VertexSet& x) {
  return g.set_of(detail::omega(g, g.mask_of(x)));
}

VertexSet k_fin_inf(const Graph& g, const VertexSet& k) {
  if (!is_hereditary(g, k))
    throw ValidationError(k.to_string() + " is not hereditary");
  if (!is_saturated(g, k))
    throw ValidationError(k.to_string() + " is not saturated");
  return g.set_of(detail::k_fin_inf(g, g.mask_of(k)));
}

VertexSet k_inf_empty(const Graph& g, const VertexSet& k) {
  return g.set_of(detail::k_inf_empty(g, g.mask_of(k)));
}

namespace {

std::vector<VertexSet> hs_by_scan(const Graph& g) {
  const std::size_t n = g.size();
  if (n > 30) throw ValidationError("subset scan is limited to 30 vertices");
  std::vector<VertexSet> out;
  Graph::Mask m(n);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    for (std::size_t i = 0; i < n; ++i) m[i] = (bits >> i) & 1;
    Graph::Mask closed = m;
    detail::shc(g, closed);
    if (closed == m) out.push_back(g.set_of(m));
  }
  return out;
}

// Every hereditary saturated K is reached from ∅ by repeatedly adding one of
// its vertices and closing, so a breadth-first walk over these steps visits
// the whole lattice.
std::vector<VertexSet> hs_by_closure(const Graph& g) {
  const std::size_t n = g.size();
  Graph::Mask start(n, 0);
  detail::shc(g, start);
  std::set<Graph::Mask> seen{start};
  std::deque<Graph::Mask> queue{start};
  while (!queue.empty()) {
    Graph::Mask cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < n; ++v) {
      if (cur[v]) continue;
      Graph::Mask next = cur;
      next[v] = 1;
      detail::shc(g, next);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<VertexSet> out;
  out.reserve(seen.size());
  for (const auto& m : seen) out.push_back(g.set_of(m));
  return out;
}

}  // namespace

std::vector<VertexSet> enumerate_hs(const Graph& g, HsStrategy strategy) {
  if (strategy == HsStrategy::automatic)
    strategy = g.size() <= 20 ? HsStrategy::scan : HsStrategy::closure;
  std::vector<VertexSet> out =
      strategy == HsStrategy::scan ? hs_by_scan(g) : hs_by_closure(g);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace primspec
