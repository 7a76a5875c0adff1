#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "primspec/graph.hpp"

namespace primspec {

enum class TailKind { gamma, tau };

// A maximal tail M. Tau tails carry their canonical loop L_M: the unique
// (up to rotation) vertex-simple loop in M with no exit in M.
struct MaximalTail {
  VertexSet vertices;
  std::optional<Loop> loop;

  TailKind kind() const noexcept {
    return loop ? TailKind::tau : TailKind::gamma;
  }
  bool is_tau() const noexcept { return loop.has_value(); }

  friend bool operator==(const MaximalTail&, const MaximalTail&) = default;
};

// Index data attached to a maximal tail.
//
// For tau tails k_m = K_M = L_M⁰ ∪ {v ∉ L_M⁰ : |A_M(v)| < ∞} and
// b_m = (K_M)^fin_∞ ∩ Ω(M)^fin_∞; both are left empty for gamma tails.
// m_inf_empty = Ω(M)_∞^∅, which has at most one element.
struct TailData {
  MaximalTail tail;
  VertexSet k_m;
  VertexSet b_m;
  VertexSet m_inf_empty;

  friend bool operator==(const TailData&, const TailData&) = default;
};

// Literal (MT1)-(MT3) check; the empty set is not a maximal tail.
bool is_maximal_tail(const Graph& g, const VertexSet& m);

// All maximal tails in canonical order.
//
// With finitely many vertices, (MT3) yields a common lower bound x for the
// whole of M, and then (MT1) forces M = {v : v ≥ x}. So the candidates are
// the vertex tails, filtered by (MT2).
std::vector<MaximalTail> maximal_tails(const Graph& g);

// L_M in canonical rotation, or nullopt when M is a gamma tail. A loop edge
// of multiplicity ≥ 2 is an exit. Throws ValidationError if M is not a
// maximal tail and InternalInconsistency if two distinct exitless loops
// turn up.
std::optional<Loop> no_exit_loop(const Graph& g, const VertexSet& m);

// Whether A_M(v), the paths from v that meet L_M⁰ only at their last vertex,
// is finite. Decided structurally: the set is infinite iff such a path can
// use an ω edge or revisit a vertex. Throws ValidationError if M is not tau
// or v ∈ L_M⁰.
bool a_count_is_finite(const Graph& g, const MaximalTail& m,
                       std::string_view v);

// |A_M(v)|, counted with edge multiplicities; ω when infinite. Throws
// std::overflow_error past 2^63-1.
Cardinality a_count(const Graph& g, const MaximalTail& m, std::string_view v);

TailData tail_data(const Graph& g, const MaximalTail& m);

// BV(E) = {v : |s⁻¹(v)| = ∞ and 0 < |s⁻¹(v) \ r⁻¹(Ω(v))| < ∞}.
VertexSet breaking_vertices(const Graph& g);

}  // namespace primspec
