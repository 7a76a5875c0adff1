#pragma once

#include <vector>

#include "primspec/graph.hpp"

namespace primspec {

// v ∈ K and v ≥ w imply w ∈ K.
bool is_hereditary(const Graph& g, const VertexSet& k);

// Every v with 0 < |s⁻¹(v)| < ∞ whose edges all land in K belongs to K.
// Sinks and infinite emitters are never forced in.
bool is_saturated(const Graph& g, const VertexSet& k);

// Σ(X): the smallest saturated set containing X.
VertexSet saturate(const Graph& g, const VertexSet& x);

// ΣH(X): the smallest hereditary saturated set containing X.
VertexSet shc(const Graph& g, const VertexSet& x);

// Ω(X) = {w ∉ X : w ≱ v for all v ∈ X}.
VertexSet omega(const Graph& g, const VertexSet& x);

// K^fin_∞: vertices outside K emitting infinitely many edges, of which a
// finite, non-zero number leave K. Throws ValidationError unless K is
// hereditary and saturated.
VertexSet k_fin_inf(const Graph& g, const VertexSet& k);

// K_∞^∅: vertices outside K emitting infinitely many edges, all into K.
VertexSet k_inf_empty(const Graph& g, const VertexSet& k);

enum class HsStrategy {
  automatic,  // scan for up to 20 vertices, closure generation beyond
  scan,       // test all 2^n subsets
  closure,    // grow the lattice by ΣH(K ∪ {v}) from ∅
};

// All hereditary saturated subsets in canonical order; always starts with ∅
// and ends with E⁰.
std::vector<VertexSet> enumerate_hs(const Graph& g,
                                    HsStrategy strategy = HsStrategy::automatic);

namespace detail {

// Mask-level kernels shared by the higher modules.
void hereditary_close(const Graph& g, Graph::Mask& m);
void saturate(const Graph& g, Graph::Mask& m);
void shc(const Graph& g, Graph::Mask& m);
Graph::Mask omega(const Graph& g, const Graph::Mask& x);
Graph::Mask k_fin_inf(const Graph& g, const Graph::Mask& k);
Graph::Mask k_inf_empty(const Graph& g, const Graph::Mask& k);
// |s⁻¹(v) ∩ r⁻¹(S)|.
Cardinality out_into(const Graph& g, std::size_t v, const Graph::Mask& s);

}  // namespace detail

}  // namespace primspec
