#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primspec/cardinality.hpp"

namespace primspec {

using VertexId = std::string;

// Vertex names are non-empty strings over [A-Za-z0-9_].
bool is_valid_vertex_name(std::string_view name) noexcept;

// An ordered set of vertex names.
//
// Lists of sets are ordered canonically: first by cardinality, then
// lexicographically on the sorted member sequence. This puts ∅ first and the
// whole vertex set last in every enumeration.
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> members);
  explicit VertexSet(std::vector<VertexId> members);

  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const std::vector<VertexId>& members() const noexcept { return members_; }

  bool contains(std::string_view v) const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;
  void insert(VertexId v);

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b);
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b);

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b);

  // "{a, b}" for diagnostics.
  std::string to_string() const;

 private:
  std::vector<VertexId> members_;  // sorted, unique
};

struct Edge {
  VertexId src;
  VertexId dst;
  Cardinality multiplicity{1};

  friend bool operator==(const Edge&, const Edge&) = default;
};

// A vertex-simple loop, stored in the rotation that starts at its
// lexicographically least vertex. vertices[i] -> vertices[i+1] (cyclically)
// are its edges.
struct Loop {
  std::vector<VertexId> vertices;

  std::vector<std::pair<VertexId, VertexId>> edges() const;
  VertexSet vertex_set() const { return VertexSet(vertices); }

  // Rotates an arbitrary cyclic vertex sequence into canonical form.
  static Loop canonical(std::vector<VertexId> cycle);

  friend bool operator==(const Loop&, const Loop&) = default;
  friend auto operator<=>(const Loop&, const Loop&) = default;
};

// A finitely presented directed graph: a finite vertex set and, for each
// ordered pair of vertices, the number of parallel edges (possibly ω).
//
// Graphs are immutable once built. Reachability is precomputed so that
// path queries are O(1).
class Graph {
 public:
  struct Arc {
    std::size_t target;
    Cardinality multiplicity;
  };

  // A membership vector indexed by vertex position.
  using Mask = std::vector<char>;

  Graph() = default;

  // Edges with the same (src, dst) are merged by summing multiplicities.
  // Throws ValidationError for invalid or duplicate vertex names, unknown
  // endpoints, or zero multiplicities.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t size() const noexcept { return vertices_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }
  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  VertexSet vertex_set() const { return VertexSet(vertices_); }

  // Canonical order: by (src, dst).
  std::vector<Edge> edges() const;

  bool contains(std::string_view v) const noexcept;
  // Throws ValidationError for an unknown vertex.
  std::size_t index_of(std::string_view v) const;
  const VertexId& name(std::size_t i) const { return vertices_[i]; }

  std::span<const Arc> out_arcs(std::size_t i) const { return out_[i]; }
  Cardinality out_cardinality(std::size_t i) const { return out_card_[i]; }
  // Multiplicity of the edge i -> j, zero if absent.
  Cardinality multiplicity(std::size_t i, std::size_t j) const;
  bool reaches(std::size_t from, std::size_t to) const noexcept {
    return reach_[from * vertices_.size() + to] != 0;
  }

  // Throws ValidationError if the set mentions an unknown vertex.
  Mask mask_of(const VertexSet& s) const;
  VertexSet set_of(const Mask& m) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges() == b.edges();
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<std::vector<Arc>> out_;
  std::vector<Cardinality> out_card_;
  std::vector<char> reach_;
};

// |s⁻¹(v)|.
Cardinality out_cardinality(const Graph& g, std::string_view v);
// |s⁻¹(v) ∩ r⁻¹(S)|.
Cardinality out_cardinality_into(const Graph& g, std::string_view v,
                                 const VertexSet& s);
// v ≥ w: there is a path (possibly of length zero) from a to b.
bool reaches(const Graph& g, std::string_view a, std::string_view b);
// {v : v ≥ x}.
VertexSet tail_of_vertex(const Graph& g, std::string_view x);
// All vertex cycles with every vertex in `within`, canonically rotated and
// sorted. Parallel edges do not produce extra loops.
std::vector<Loop> vertex_simple_loops(const Graph& g, const VertexSet& within);
bool is_row_finite(const Graph& g);

}  // namespace primspec
