#include "primspec/tails.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "primspec/errors.hpp"
#include "primspec/subsets.hpp"

namespace primspec {
namespace {

using Mask = Graph::Mask;

bool is_maximal_tail_mask(const Graph& g, const Mask& m) {
  const std::size_t n = g.size();
  if (std::none_of(m.begin(), m.end(), [](char c) { return c != 0; }))
    return false;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      // (MT1)
      if (m[w] && !m[v] && g.reaches(v, w)) return false;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!m[v]) continue;
    // (MT2)
    const Cardinality out = g.out_cardinality(v);
    if (!out.is_zero() && out.is_finite() && detail::out_into(g, v, m).is_zero())
      return false;
    // (MT3)
    for (std::size_t w = v + 1; w < n; ++w) {
      if (!m[w]) continue;
      bool bound = false;
      for (std::size_t y = 0; y < n && !bound; ++y)
        bound = m[y] && g.reaches(v, y) && g.reaches(w, y);
      if (!bound) return false;
    }
  }
  return true;
}

// Cycles of the partial map that sends each vertex with exactly one edge
// into M to the target of that edge. These are exactly the vertex-simple
// loops in M without an exit in M.
std::vector<Loop> exitless_loops(const Graph& g, const Mask& m) {
  const std::size_t n = g.size();
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> next(n, none);
  for (std::size_t v = 0; v < n; ++v) {
    if (!m[v] || detail::out_into(g, v, m) != Cardinality{1}) continue;
    for (const auto& a : g.out_arcs(v))
      if (m[a.target]) next[v] = a.target;
  }
  std::vector<Loop> loops;
  std::vector<int> state(n, 0);  // 0 unvisited, 1 on current walk, 2 done
  for (std::size_t start = 0; start < n; ++start) {
    if (next[start] == none || state[start] != 0) continue;
    std::vector<std::size_t> walk;
    std::size_t cur = start;
    while (cur != none && state[cur] == 0) {
      state[cur] = 1;
      walk.push_back(cur);
      cur = next[cur];
    }
    if (cur != none && state[cur] == 1) {
      auto first = std::find(walk.begin(), walk.end(), cur);
      std::vector<VertexId> names;
      for (auto it = first; it != walk.end(); ++it) names.push_back(g.name(*it));
      loops.push_back(Loop::canonical(std::move(names)));
    }
    for (std::size_t w : walk) state[w] = 2;
  }
  std::sort(loops.begin(), loops.end());
  return loops;
}

std::optional<Loop> exitless_loop(const Graph& g, const Mask& m) {
  std::vector<Loop> loops = exitless_loops(g, m);
  if (loops.size() > 1)
    throw InternalInconsistency("maximal tail " + g.set_of(m).to_string() +
                                " has more than one loop without exits");
  if (loops.empty()) return std::nullopt;
  return std::move(loops.front());
}

// The vertices that can occur before the last step of a path in A_M(v).
struct APathRegion {
  Mask region;
  Mask loop;
};

APathRegion a_path_region(const Graph& g, const MaximalTail& m,
                          std::size_t v) {
  const std::size_t n = g.size();
  APathRegion r{Mask(n, 0), g.mask_of(m.loop->vertex_set())};
  const Mask& loop = r.loop;

  Mask forward(n, 0);
  std::vector<std::size_t> stack{v};
  forward[v] = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (const auto& a : g.out_arcs(u)) {
      if (loop[a.target] || forward[a.target]) continue;
      forward[a.target] = 1;
      stack.push_back(a.target);
    }
  }

  // Backward closure from the loop, never passing through loop vertices.
  Mask backward(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (loop[u] || backward[u]) continue;
      for (const auto& a : g.out_arcs(u)) {
        if (loop[a.target] || backward[a.target]) {
          backward[u] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  for (std::size_t u = 0; u < n; ++u) r.region[u] = forward[u] && backward[u];
  return r;
}

bool region_has_cycle(const Graph& g, const Mask& region) {
  const std::size_t n = g.size();
  std::vector<int> color(n, 0);
  std::function<bool(std::size_t)> visit = [&](std::size_t u) {
    color[u] = 1;
    for (const auto& a : g.out_arcs(u)) {
      if (!region[a.target]) continue;
      if (color[a.target] == 1) return true;
      if (color[a.target] == 0 && visit(a.target)) return true;
    }
    color[u] = 2;
    return false;
  };
  for (std::size_t u = 0; u < n; ++u)
    if (region[u] && color[u] == 0 && visit(u)) return true;
  return false;
}

bool a_finite(const Graph& g, const APathRegion& r) {
  for (std::size_t u = 0; u < g.size(); ++u) {
    if (!r.region[u]) continue;
    for (const auto& a : g.out_arcs(u))
      if ((r.region[a.target] || r.loop[a.target]) &&
          a.multiplicity.is_omega())
        return false;
  }
  return !region_has_cycle(g, r.region);
}

std::size_t checked_start(const Graph& g, const MaximalTail& m,
                          std::string_view v) {
  if (!m.is_tau())
    throw ValidationError("A_M is only defined for tails with a loop");
  const std::size_t i = g.index_of(v);
  if (m.loop->vertex_set().contains(v))
    throw ValidationError("vertex '" + std::string(v) + "' lies on L_M");
  return i;
}

}  // namespace

bool is_maximal_tail(const Graph& g, const VertexSet& m) {
  return is_maximal_tail_mask(g, g.mask_of(m));
}

std::vector<MaximalTail> maximal_tails(const Graph& g) {
  const std::size_t n = g.size();
  std::set<Mask> seen;
  std::vector<MaximalTail> out;
  for (std::size_t x = 0; x < n; ++x) {
    Mask m(n, 0);
    for (std::size_t v = 0; v < n; ++v) m[v] = g.reaches(v, x);
    if (!seen.insert(m).second) continue;
    bool mt2 = true;
    for (std::size_t v = 0; v < n && mt2; ++v) {
      if (!m[v]) continue;
      const Cardinality out_v = g.out_cardinality(v);
      mt2 = out_v.is_zero() || out_v.is_omega() ||
            !detail::out_into(g, v, m).is_zero();
    }
    if (!mt2) continue;
    out.push_back(MaximalTail{g.set_of(m), exitless_loop(g, m)});
  }
  std::sort(out.begin(), out.end(),
            [](const MaximalTail& a, const MaximalTail& b) {
              return a.vertices < b.vertices;
            });
  return out;
}

std::optional<Loop> no_exit_loop(const Graph& g, const VertexSet& m) {
  const Mask mask = g.mask_of(m);
  if (!is_maximal_tail_mask(g, mask))
    throw ValidationError(m.to_string() + " is not a maximal tail");
  return exitless_loop(g, mask);
}

bool a_count_is_finite(const Graph& g, const MaximalTail& m,
                       std::string_view v) {
  const std::size_t start = checked_start(g, m, v);
  return a_finite(g, a_path_region(g, m, start));
}

Cardinality a_count(const Graph& g, const MaximalTail& m, std::string_view v) {
  const std::size_t start = checked_start(g, m, v);
  const APathRegion r = a_path_region(g, m, start);
  if (!a_finite(g, r)) return Cardinality::omega();
  if (!r.region[start]) return Cardinality{};

  // The region is acyclic here, so memoised recursion terminates.
  std::vector<std::optional<Cardinality>> memo(g.size());
  std::function<Cardinality(std::size_t)> count = [&](std::size_t u) {
    if (memo[u]) return *memo[u];
    Cardinality total;
    for (const auto& a : g.out_arcs(u)) {
      if (r.loop[a.target]) {
        total += a.multiplicity;
      } else if (r.region[a.target]) {
        total += a.multiplicity * count(a.target);
      }
    }
    memo[u] = total;
    return total;
  };
  return count(start);
}

TailData tail_data(const Graph& g, const MaximalTail& m) {
  TailData d{m, {}, {}, {}};
  const Mask tail = g.mask_of(m.vertices);
  const Mask outside = detail::omega(g, tail);
  d.m_inf_empty = g.set_of(detail::k_inf_empty(g, outside));
  if (!m.is_tau()) return d;

  const std::size_t n = g.size();
  Mask k(n, 0);
  const Mask loop = g.mask_of(m.loop->vertex_set());
  for (std::size_t v = 0; v < n; ++v) {
    k[v] = loop[v] ||
           a_finite(g, a_path_region(g, m, v));
  }
  d.k_m = g.set_of(k);
  const Mask kbad = detail::k_fin_inf(g, k);
  const Mask obad = detail::k_fin_inf(g, outside);
  Mask b(n, 0);
  for (std::size_t v = 0; v < n; ++v) b[v] = kbad[v] && obad[v];
  d.b_m = g.set_of(b);
  return d;
}

VertexSet breaking_vertices(const Graph& g) {
  const std::size_t n = g.size();
  Mask bv(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out_cardinality(v).is_finite()) continue;
    Mask single(n, 0);
    single[v] = 1;
    const Mask om = detail::omega(g, single);
    Mask rest(n, 0);
    for (std::size_t w = 0; w < n; ++w) rest[w] = !om[w];
    const Cardinality leaving = detail::out_into(g, v, rest);
    bv[v] = leaving.is_finite() && !leaving.is_zero();
  }
  return g.set_of(bv);
}

}  // namespace primspec
