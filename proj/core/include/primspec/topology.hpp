#pragma once

#include <map>
#include <variant>
#include <vector>

#include "primspec/circle.hpp"
#include "primspec/ideals.hpp"
#include "primspec/prim_space.hpp"

namespace primspec {

// A finitely described subset of Prim(C*(E)): gamma tails X, breaking
// vertices W, and for each tau tail N a set D(N) of circle parameters.
// Tau tails with empty D are never stored.
struct PrimSubset {
  std::vector<VertexSet> gamma;
  VertexSet bv;
  std::map<VertexSet, CircleSet> circle;

  // Sorts and deduplicates gamma and drops empty circle entries.
  void normalize();
  bool empty() const noexcept {
    return gamma.empty() && bv.empty() && circle.empty();
  }
  bool contains(const PrimIdeal& p) const;
  // Componentwise inclusion.
  bool is_subset_of(const PrimSubset& other) const;

  friend PrimSubset operator|(const PrimSubset& a, const PrimSubset& b);
  friend bool operator==(const PrimSubset&, const PrimSubset&) = default;
};

// Throws ValidationError unless every gamma entry is a gamma tail, every bv
// entry a breaking vertex and every circle key a tau tail.
void validate(const PrimSpace& space, const PrimSubset& s);

PrimSubset singleton(const PrimIdeal& p);

struct TauOrder {
  std::vector<VertexSet> y_min;
  std::vector<VertexSet> y_inf;

  friend bool operator==(const TauOrder&, const TauOrder&) = default;
};

// Y_min: members of Y whose loop reaches the loop of no other member.
// Y_∞: members whose loop reaches the loop of no member of Y_min. Paths may
// have length zero, so Y_min ∩ Y_∞ = ∅. Throws ValidationError if Y has a
// non-tau member.
TauOrder tau_order(const PrimSpace& space, const std::vector<VertexSet>& y);
TauOrder tau_order(const Graph& g, const std::vector<VertexSet>& y);

// Hull-kernel closure, decided member by member from the graph. The
// closures of the X, W and Y parts are computed separately and united.
PrimSubset closure(const PrimSpace& space, const PrimSubset& s);
PrimSubset closure(const Graph& g, const PrimSubset& s);

// Whether ∩S ⊆ J, by a separate route: the intersection is reduced to one
// gauge-invariant factor and a few circle factors, and J, being prime,
// contains the intersection iff it contains one factor. Containment is then
// read off from the sandwich bounds. The empty set has no members.
bool oracle_closure_member(const PrimSpace& space, const PrimSubset& s,
                           const PrimIdeal& j);

// A whole circle family N × 𝕋, used where individual parameters do not
// matter.
struct CircleFamily {
  VertexSet tail;
  friend auto operator<=>(const CircleFamily&, const CircleFamily&) = default;
  friend bool operator==(const CircleFamily&, const CircleFamily&) = default;
};

using PrimNode = std::variant<GaugeTail, BreakingVertex, CircleFamily>;

// from ≤ to in the specialization preorder, i.e. to ∈ closure({from}).
// For two circle nodes with parameter_matched set, only (N, t) ≤ (N, t)
// holds; otherwise every parameter pair is related.
struct OrderPair {
  PrimNode from;
  PrimNode to;
  bool parameter_matched = false;

  friend bool operator==(const OrderPair&, const OrderPair&) = default;
};

// Nodes are listed gamma tails, then breaking vertices, then circle
// families; pairs come in that order on both coordinates.
std::vector<PrimNode> prim_nodes(const PrimSpace& space);
std::vector<OrderPair> specialization_order(const PrimSpace& space);

// Prim(C*(E)) is a single point: E⁰ is the only maximal tail, it is a gamma
// tail, and there are no breaking vertices. Throws ValidationError on the
// empty graph.
bool is_simple(const Graph& g);

}  // namespace primspec
