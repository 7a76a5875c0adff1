#include "primspec/graph.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <stdexcept>

#include "primspec/errors.hpp"

namespace primspec {

bool is_valid_vertex_name(std::string_view name) noexcept {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<VertexId> members)
    : VertexSet(std::vector<VertexId>(members)) {}

VertexSet::VertexSet(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool VertexSet::contains(std::string_view v) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), v,
                            std::less<>{});
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

void VertexSet::insert(VertexId v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, std::move(v));
}

VertexSet operator|(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet operator&(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out.members_));
  return out;
}

VertexSet operator-(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out.members_));
  return out;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return a.members_ <=> b.members_;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i];
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Loop

std::vector<std::pair<VertexId, VertexId>> Loop::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

Loop Loop::canonical(std::vector<VertexId> cycle) {
  if (cycle.empty()) throw ValidationError("a loop needs at least one vertex");
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  return Loop{std::move(cycle)};
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
  for (const auto& v : vertices) {
    if (!is_valid_vertex_name(v))
      throw ValidationError("invalid vertex name '" + v + "'");
  }
  std::sort(vertices.begin(), vertices.end());
  if (auto dup = std::adjacent_find(vertices.begin(), vertices.end());
      dup != vertices.end())
    throw ValidationError("duplicate vertex '" + *dup + "'");
  vertices_ = std::move(vertices);

  const std::size_t n = vertices_.size();
  std::map<std::pair<std::size_t, std::size_t>, Cardinality> merged;
  for (const auto& e : edges) {
    if (e.multiplicity.is_zero())
      throw ValidationError("edge " + e.src + " -> " + e.dst +
                            " has multiplicity 0");
    try {
      merged[{index_of(e.src), index_of(e.dst)}] += e.multiplicity;
    } catch (const std::overflow_error&) {
      throw ValidationError("total multiplicity of " + e.src + " -> " +
                            e.dst + " exceeds 2^63-1");
    }
  }

  out_.assign(n, {});
  out_card_.assign(n, Cardinality{});
  for (const auto& [key, mult] : merged) {
    out_[key.first].push_back(Arc{key.second, mult});
    try {
      out_card_[key.first] += mult;
    } catch (const std::overflow_error&) {
      throw ValidationError("out-degree of " + vertices_[key.first] +
                            " exceeds 2^63-1");
    }
  }

  reach_.assign(n * n, 0);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    char* row = &reach_[s * n];
    row[s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (const Arc& a : out_[u]) {
        if (!row[a.target]) {
          row[a.target] = 1;
          stack.push_back(a.target);
        }
      }
    }
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < out_.size(); ++i)
    for (const Arc& a : out_[i])
      out.push_back(Edge{vertices_[i], vertices_[a.target], a.multiplicity});
  return out;
}

bool Graph::contains(std::string_view v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v,
                            std::less<>{});
}

std::size_t Graph::index_of(std::string_view v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                             std::less<>{});
  if (it == vertices_.end() || *it != v)
    throw ValidationError("unknown vertex '" + std::string(v) + "'");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Cardinality Graph::multiplicity(std::size_t i, std::size_t j) const {
  for (const Arc& a : out_[i])
    if (a.target == j) return a.multiplicity;
  return Cardinality{};
}

Graph::Mask Graph::mask_of(const VertexSet& s) const {
  Mask m(vertices_.size(), 0);
  for (const auto& v : s) m[index_of(v)] = 1;
  return m;
}

VertexSet Graph::set_of(const Mask& m) const {
  std::vector<VertexId> members;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) members.push_back(vertices_[i]);
  return VertexSet(std::move(members));
}

// ---------------------------------------------------------------------------
// Queries

Cardinality out_cardinality(const Graph& g, std::string_view v) {
  return g.out_cardinality(g.index_of(v));
}

Cardinality out_cardinality_into(const Graph& g, std::string_view v,
                                 const VertexSet& s) {
  const std::size_t i = g.index_of(v);
  const Graph::Mask target = g.mask_of(s);
  Cardinality total;
  for (const auto& a : g.out_arcs(i))
    if (target[a.target]) total += a.multiplicity;
  return total;
}

bool reaches(const Graph& g, std::string_view a, std::string_view b) {
  return g.reaches(g.index_of(a), g.index_of(b));
}

VertexSet tail_of_vertex(const Graph& g, std::string_view x) {
  const std::size_t target = g.index_of(x);
  Graph::Mask m(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v) m[v] = g.reaches(v, target);
  return g.set_of(m);
}

namespace {

// Backtracking search rooted at each vertex in turn; only vertices with a
// larger index than the root may appear, so each cycle is found once and
// already starts at its least vertex.
void extend_cycles(const Graph& g, const Graph::Mask& allowed,
                   std::size_t root, std::size_t u,
                   std::vector<std::size_t>& path, Graph::Mask& on_path,
                   std::vector<Loop>& out) {
  for (const auto& a : g.out_arcs(u)) {
    const std::size_t w = a.target;
    if (w == root) {
      std::vector<VertexId> names;
      names.reserve(path.size());
      for (std::size_t p : path) names.push_back(g.name(p));
      out.push_back(Loop{std::move(names)});
    } else if (w > root && allowed[w] && !on_path[w]) {
      on_path[w] = 1;
      path.push_back(w);
      extend_cycles(g, allowed, root, w, path, on_path, out);
      path.pop_back();
      on_path[w] = 0;
    }
  }
}

}  // namespace

std::vector<Loop> vertex_simple_loops(const Graph& g, const VertexSet& within) {
  const Graph::Mask allowed = g.mask_of(within);
  std::vector<Loop> out;
  std::vector<std::size_t> path;
  Graph::Mask on_path(g.size(), 0);
  for (std::size_t root = 0; root < g.size(); ++root) {
    if (!allowed[root]) continue;
    path.assign(1, root);
    on_path[root] = 1;
    extend_cycles(g, allowed, root, root, path, on_path, out);
    on_path[root] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_row_finite(const Graph& g) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.out_cardinality(v).is_omega()) return false;
  return true;
}

}  // namespace primspec
