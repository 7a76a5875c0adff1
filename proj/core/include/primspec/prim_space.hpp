#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primspec/graph.hpp"
#include "primspec/ideals.hpp"
#include "primspec/tails.hpp"

namespace primspec {

enum class TailNaming {
  index,  // "M1", "M2", ... in canonical tail order
  root,   // "M_x" for the least vertex x with M = {v : v ≥ x}
};

// The index set of Prim(C*(E)) for one graph, computed once: every maximal
// tail with its K_M / B_M / M_∞^∅ data, the breaking vertices, and the
// sandwich bounds of the tau tails.
class PrimSpace {
 public:
  explicit PrimSpace(Graph g, TailNaming naming = TailNaming::index);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<TailData>& tails() const noexcept { return tails_; }
  const VertexSet& breaking_vertices() const noexcept { return bv_; }

  // Positions into tails(), in canonical order.
  const std::vector<std::size_t>& gamma_indices() const noexcept { return gamma_; }
  const std::vector<std::size_t>& tau_indices() const noexcept { return tau_; }

  std::optional<std::size_t> find_tail(const VertexSet& m) const;
  // Throws ValidationError if m is not a maximal tail.
  std::size_t tail_index(const VertexSet& m) const;

  const std::string& tail_id(std::size_t index) const { return ids_[index]; }
  std::string tail_id(const VertexSet& m) const { return ids_[tail_index(m)]; }
  // Accepts the identifier of either naming scheme. Throws ValidationError.
  std::size_t tail_by_id(std::string_view id) const;

  // The gauge-invariant ideal of a gamma tail or breaking vertex.
  GaugeInvariantIdeal gauge_ideal(const PrimIdeal& p) const;
  const Sandwich& sandwich(std::size_t tau_tail) const;

  // Whether the loop of one tau tail reaches the loop of another.
  bool loop_reaches(std::size_t from, std::size_t to) const;

  // Throws ValidationError unless p names an element of this space.
  void validate(const PrimIdeal& p) const;

 private:
  Graph graph_;
  std::vector<TailData> tails_;
  std::vector<std::size_t> gamma_;
  std::vector<std::size_t> tau_;
  std::vector<std::string> ids_;
  std::vector<std::string> index_ids_;
  std::vector<std::string> root_ids_;
  std::vector<std::optional<Sandwich>> sandwich_;
  VertexSet bv_;
};

std::string to_string(const PrimSpace& space, const PrimIdeal& p);

}  // namespace primspec
