#include "primspec/prim_space.hpp"

#include <algorithm>

#include "primspec/errors.hpp"

namespace primspec {

PrimSpace::PrimSpace(Graph g, TailNaming naming) : graph_(std::move(g)) {
  for (const MaximalTail& m : maximal_tails(graph_)) {
    tails_.push_back(tail_data(graph_, m));
    (m.is_tau() ? tau_ : gamma_).push_back(tails_.size() - 1);
  }
  bv_ = primspec::breaking_vertices(graph_);

  for (std::size_t i = 0; i < tails_.size(); ++i) {
    index_ids_.push_back("M" + std::to_string(i + 1));
    const VertexSet& m = tails_[i].tail.vertices;
    // Vertices are sorted, so the first root found is the least one.
    for (const VertexId& x : m) {
      if (tail_of_vertex(graph_, x) == m) {
        root_ids_.push_back("M_" + x);
        break;
      }
    }
    if (root_ids_.size() != i + 1)
      throw InternalInconsistency("maximal tail " + m.to_string() +
                                  " has no root vertex");
    sandwich_.push_back(tails_[i].tail.is_tau()
                            ? std::optional<Sandwich>(primspec::sandwich(graph_, tails_[i]))
                            : std::nullopt);
  }
  ids_ = naming == TailNaming::root ? root_ids_ : index_ids_;
}

std::optional<std::size_t> PrimSpace::find_tail(const VertexSet& m) const {
  auto it = std::find_if(tails_.begin(), tails_.end(), [&](const TailData& d) {
    return d.tail.vertices == m;
  });
  if (it == tails_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - tails_.begin());
}

std::size_t PrimSpace::tail_index(const VertexSet& m) const {
  if (auto i = find_tail(m)) return *i;
  throw ValidationError(m.to_string() + " is not a maximal tail");
}

std::size_t PrimSpace::tail_by_id(std::string_view id) const {
  for (std::size_t i = 0; i < tails_.size(); ++i)
    if (index_ids_[i] == id || root_ids_[i] == id) return i;
  throw ValidationError("unknown maximal tail '" + std::string(id) + "'");
}

GaugeInvariantIdeal PrimSpace::gauge_ideal(const PrimIdeal& p) const {
  validate(p);
  if (const auto* t = std::get_if<GaugeTail>(&p)) return gamma_ideal(graph_, t->tail);
  if (const auto* b = std::get_if<BreakingVertex>(&p))
    return breaking_vertex_ideal(graph_, b->vertex);
  throw ValidationError("circle ideals are not gauge-invariant");
}

const Sandwich& PrimSpace::sandwich(std::size_t tau_tail) const {
  if (tau_tail >= tails_.size() || !sandwich_[tau_tail])
    throw ValidationError("not a tau tail");
  return *sandwich_[tau_tail];
}

bool PrimSpace::loop_reaches(std::size_t from, std::size_t to) const {
  const auto& a = tails_.at(from).tail.loop;
  const auto& b = tails_.at(to).tail.loop;
  if (!a || !b) throw ValidationError("loop_reaches needs two tau tails");
  for (const VertexId& x : a->vertices)
    for (const VertexId& y : b->vertices)
      if (graph_.reaches(graph_.index_of(x), graph_.index_of(y))) return true;
  return false;
}

void PrimSpace::validate(const PrimIdeal& p) const {
  if (const auto* t = std::get_if<GaugeTail>(&p)) {
    if (tails_[tail_index(t->tail)].tail.is_tau())
      throw ValidationError(t->tail.to_string() + " is a tau tail");
  } else if (const auto* b = std::get_if<BreakingVertex>(&p)) {
    if (!bv_.contains(b->vertex))
      throw ValidationError("'" + b->vertex + "' is not a breaking vertex");
  } else {
    const auto& c = std::get<Circle>(p);
    if (!tails_[tail_index(c.tail)].tail.is_tau())
      throw ValidationError(c.tail.to_string() + " is a gamma tail");
  }
}

std::string to_string(const PrimSpace& space, const PrimIdeal& p) {
  if (const auto* t = std::get_if<GaugeTail>(&p)) return space.tail_id(t->tail);
  if (const auto* b = std::get_if<BreakingVertex>(&p)) return b->vertex;
  const auto& c = std::get<Circle>(p);
  return "(" + space.tail_id(c.tail) + ", " + c.t.to_string() + ")";
}

}  // namespace primspec
