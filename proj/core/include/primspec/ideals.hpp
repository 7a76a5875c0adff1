#pragma once

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "primspec/circle.hpp"
#include "primspec/graph.hpp"
#include "primspec/tails.hpp"

namespace primspec {

// J_{K,B}: K hereditary saturated, B ⊆ K^fin_∞. (E⁰, ∅) stands for the whole
// algebra and is admitted as the top of the lattice.
class GaugeInvariantIdeal {
 public:
  GaugeInvariantIdeal() = default;

  // Throws InadmissibleIdeal (or ValidationError for unknown vertices).
  static GaugeInvariantIdeal make(const Graph& g, VertexSet k, VertexSet b);
  // For pairs already known to be admissible.
  static GaugeInvariantIdeal unchecked(VertexSet k, VertexSet b) {
    GaugeInvariantIdeal j;
    j.k_ = std::move(k);
    j.b_ = std::move(b);
    return j;
  }
  static GaugeInvariantIdeal zero() { return {}; }
  static GaugeInvariantIdeal whole(const Graph& g) {
    return unchecked(g.vertex_set(), {});
  }

  const VertexSet& k() const noexcept { return k_; }
  const VertexSet& b() const noexcept { return b_; }

  friend bool operator==(const GaugeInvariantIdeal&,
                         const GaugeInvariantIdeal&) = default;
  friend std::strong_ordering operator<=>(const GaugeInvariantIdeal& a,
                                          const GaugeInvariantIdeal& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.b_ <=> b.b_;
  }

  // "(K={…}, B={…})".
  std::string to_string() const;

 private:
  VertexSet k_;
  VertexSet b_;
};

bool is_admissible(const Graph& g, const VertexSet& k, const VertexSet& b);

// Every admissible pair, sorted by (K, B).
std::vector<GaugeInvariantIdeal> enumerate_gi_ideals(const Graph& g);

// J_{K1,B1} ⊆ J_{K2,B2} iff K1 ⊆ K2 and B1 ⊆ K2 ∪ B2.
bool gi_contains(const GaugeInvariantIdeal& smaller,
                 const GaugeInvariantIdeal& larger);

// Greatest lower bound: K = ∩K_i, B = ∩(K_i ∪ B_i) ∩ K^fin_∞. Throws
// ValidationError on an empty family.
GaugeInvariantIdeal gi_meet(const Graph& g,
                            const std::vector<GaugeInvariantIdeal>& family);

// ∩_{U∈Y} J_{Ω(U),Ω(U)^fin_∞} = J_{K,K^fin_∞} with K = ∩Ω(U). Throws
// ValidationError if Y is empty or has a gamma member.
GaugeInvariantIdeal mt_intersection_special(const Graph& g,
                                            const std::vector<MaximalTail>& y);

// (Ω(M), Ω(M)^fin_∞).
GaugeInvariantIdeal gamma_ideal(const Graph& g, const VertexSet& tail);
// (Ω(v), Ω(v)^fin_∞ \ {v}).
GaugeInvariantIdeal breaking_vertex_ideal(const Graph& g, std::string_view v);

struct GaugeTail {
  VertexSet tail;
  friend auto operator<=>(const GaugeTail&, const GaugeTail&) = default;
  friend bool operator==(const GaugeTail&, const GaugeTail&) = default;
};
struct BreakingVertex {
  VertexId vertex;
  friend auto operator<=>(const BreakingVertex&, const BreakingVertex&) = default;
  friend bool operator==(const BreakingVertex&, const BreakingVertex&) = default;
};
struct Circle {
  VertexSet tail;
  CirclePoint t;
  friend auto operator<=>(const Circle&, const Circle&) = default;
  friend bool operator==(const Circle&, const Circle&) = default;
};

// A primitive ideal: one of J_{Ω(M),Ω(M)^fin_∞} for a gamma tail, the ideal
// of a breaking vertex, or R_{N,t} for a tau tail N and t ∈ 𝕋.
using PrimIdeal = std::variant<GaugeTail, BreakingVertex, Circle>;

struct PrimElements {
  struct GammaEntry {
    MaximalTail tail;
    GaugeInvariantIdeal ideal;
  };
  struct BreakingEntry {
    VertexId vertex;
    GaugeInvariantIdeal ideal;
  };
  std::vector<GammaEntry> gamma;
  std::vector<BreakingEntry> breaking;
  std::vector<MaximalTail> tau;
};

PrimElements prim_elements(const Graph& g);

struct Sandwich {
  GaugeInvariantIdeal lower;
  GaugeInvariantIdeal upper;
};

// The largest gauge-invariant ideal inside R_{N,t} and the smallest one
// containing it: (Ω(N), Ω(N)^fin_∞) and (K_N, B_N). Throws ValidationError
// unless N is a tau tail.
Sandwich sandwich(const Graph& g, const MaximalTail& n);
Sandwich sandwich(const Graph& g, const TailData& n);

// The graph (E/K) \ β(B) whose algebra is C*(E)/J_{K,B}. Each kept v in
// K^fin_∞ \ B gets a sink β(v), named "beta_" + v (prefixed again while the
// name is taken), fed by a copy of every edge into v.
Graph quotient_graph(const Graph& g, const GaugeInvariantIdeal& j);

}  // namespace primspec
