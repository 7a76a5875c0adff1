#include "primspec/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "primspec/errors.hpp"

namespace primspec::json {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

Cardinality multiplicity_from_json(const Json& m) {
  if (m.is_string() && m.get<std::string>() == "inf") return Cardinality::omega();
  if (m.is_number_unsigned()) {
    const auto v = m.get<std::uint64_t>();
    if (v == 0 || v > Cardinality::max_finite)
      throw ValidationError("edge multiplicity out of range");
    return Cardinality{v};
  }
  throw ValidationError("edge multiplicity must be a positive integer or \"inf\"");
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json m = e.multiplicity.is_omega() ? Json("inf") : Json(e.multiplicity.value());
    edges.push_back(Json::array({e.src, e.dst, m}));
  }
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<VertexId> vertices = j.at("vertices").get<std::vector<VertexId>>();
    std::vector<Edge> edges;
    for (const Json& e : j.value("edges", Json::array())) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3)
        throw ValidationError("edge must be [src, dst] or [src, dst, multiplicity]");
      edges.push_back({e[0].get<std::string>(), e[1].get<std::string>(),
                       e.size() == 3 ? multiplicity_from_json(e[2]) : Cardinality{1}});
    }
    return Graph(std::move(vertices), std::move(edges));
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("malformed graph JSON: ") + ex.what());
  }
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const Loop& l) { return Json(l.vertices); }

Json to_json(const GaugeInvariantIdeal& j) {
  return Json{{"K", to_json(j.k())}, {"B", to_json(j.b())}};
}

Json to_json(const PrimSpace& space, const PrimIdeal& p) {
  if (const auto* t = std::get_if<GaugeTail>(&p))
    return Json{{"type", "gamma"}, {"tail", space.tail_id(t->tail)}};
  if (const auto* b = std::get_if<BreakingVertex>(&p))
    return Json{{"type", "bv"}, {"vertex", b->vertex}};
  const auto& c = std::get<Circle>(p);
  return Json{{"type", "circle"}, {"tail", space.tail_id(c.tail)}, {"t", c.t.to_string()}};
}

Json to_json(const PrimSpace& space, const PrimNode& p) {
  if (const auto* t = std::get_if<GaugeTail>(&p)) return to_json(space, PrimIdeal{*t});
  if (const auto* b = std::get_if<BreakingVertex>(&p)) return to_json(space, PrimIdeal{*b});
  return Json{{"type", "circle"},
              {"tail", space.tail_id(std::get<CircleFamily>(p).tail)},
              {"t", "*"}};
}

Json to_json(const PrimSpace& space, const PrimSubset& s) {
  Json out = Json::object();
  if (!s.gamma.empty()) {
    Json ids = Json::array();
    for (std::size_t i : space.gamma_indices())
      if (std::find(s.gamma.begin(), s.gamma.end(), space.tails()[i].tail.vertices) !=
          s.gamma.end())
        ids.push_back(space.tail_id(i));
    out["gamma"] = ids;
  }
  if (!s.bv.empty()) out["bv"] = to_json(s.bv);
  if (!s.circle.empty()) {
    Json circles = Json::object();
    for (std::size_t i : space.tau_indices()) {
      auto it = s.circle.find(space.tails()[i].tail.vertices);
      if (it != s.circle.end() && !it->second.is_empty())
        circles[space.tail_id(i)] = it->second.to_string();
    }
    out["circle"] = circles;
  }
  return out;
}

PrimSubset prim_subset_from_json(const PrimSpace& space, const Json& j) {
  if (!j.is_object()) throw ValidationError("a prim subset must be a JSON object");
  PrimSubset s;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "gamma") {
        for (const Json& id : value)
          s.gamma.push_back(space.tails()[space.tail_by_id(id.get<std::string>())]
                                .tail.vertices);
      } else if (key == "bv") {
        for (const Json& v : value) s.bv.insert(v.get<std::string>());
      } else if (key == "circle") {
        if (!value.is_object())
          throw ValidationError("\"circle\" must map tail ids to circle sets");
        for (const auto& [id, expr] : value.items()) {
          const VertexSet& m = space.tails()[space.tail_by_id(id)].tail.vertices;
          s.circle[m] = s.circle[m] | CircleSet::parse(expr.get<std::string>());
        }
      } else {
        throw ValidationError("unknown prim subset key '" + key + "'");
      }
    }
  } catch (const Json::exception& ex) {
    throw ValidationError(std::string("malformed prim subset: ") + ex.what());
  }
  s.normalize();
  validate(space, s);
  return s;
}

PrimSubset parse_prim_subset(const PrimSpace& space, std::string_view text) {
  text = trim(text);
  if (text.starts_with("{")) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& ex) {
      throw ValidationError(std::string("invalid JSON: ") + ex.what());
    }
    return prim_subset_from_json(space, j);
  }

  Json j = Json::object();
  for (std::string_view part : split(text, ';')) {
    if (part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string_view::npos)
      throw ValidationError("expected key:value in '" + std::string(part) + "'");
    const std::string key(trim(part.substr(0, colon)));
    const std::string_view value = trim(part.substr(colon + 1));
    if (key == "gamma" || key == "bv") {
      for (std::string_view item : split(value, ','))
        if (!item.empty()) j[key].push_back(std::string(item));
    } else if (key == "circle") {
      const auto eq = value.find('=');
      if (eq == std::string_view::npos)
        throw ValidationError("expected circle:<tail>=<set> in '" + std::string(part) + "'");
      const std::string id(trim(value.substr(0, eq)));
      const std::string expr(trim(value.substr(eq + 1)));
      if (j.contains("circle") && j["circle"].contains(id)) {
        j["circle"][id] = j["circle"][id].get<std::string>() + "," + expr;
      } else {
        j["circle"][id] = expr;
      }
    } else {
      throw ValidationError("unknown prim subset key '" + key + "'");
    }
  }
  return prim_subset_from_json(space, j);
}

Json tails_report(const PrimSpace& space) {
  Json tails = Json::array();
  for (std::size_t i = 0; i < space.tails().size(); ++i) {
    const TailData& d = space.tails()[i];
    Json t{{"id", space.tail_id(i)},
           {"vertices", to_json(d.tail.vertices)},
           {"kind", d.tail.is_tau() ? "tau" : "gamma"}};
    if (d.tail.is_tau()) {
      t["loop"] = to_json(*d.tail.loop);
      t["K_M"] = to_json(d.k_m);
      t["B_M"] = to_json(d.b_m);
    }
    t["M_inf_empty"] = to_json(d.m_inf_empty);
    tails.push_back(std::move(t));
  }
  return Json{{"schema", schema}, {"tails", tails}};
}

Json prim_report(const PrimSpace& space) {
  const Graph& g = space.graph();
  Json gamma = Json::array();
  for (std::size_t i : space.gamma_indices()) {
    const VertexSet& m = space.tails()[i].tail.vertices;
    gamma.push_back(Json{{"id", space.tail_id(i)},
                         {"vertices", to_json(m)},
                         {"ideal", to_json(gamma_ideal(g, m))}});
  }
  Json bv = Json::array();
  for (const VertexId& v : space.breaking_vertices())
    bv.push_back(Json{{"vertex", v}, {"ideal", to_json(breaking_vertex_ideal(g, v))}});
  Json tau = Json::array();
  for (std::size_t i : space.tau_indices()) {
    const TailData& d = space.tails()[i];
    const Sandwich& s = space.sandwich(i);
    tau.push_back(Json{{"id", space.tail_id(i)},
                       {"vertices", to_json(d.tail.vertices)},
                       {"loop", to_json(*d.tail.loop)},
                       {"lower", to_json(s.lower)},
                       {"upper", to_json(s.upper)}});
  }
  return Json{{"schema", schema}, {"gamma", gamma}, {"bv", bv}, {"tau", tau}};
}

}  // namespace primspec::json
