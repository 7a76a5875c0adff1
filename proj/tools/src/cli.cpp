#include "primspec/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "primspec/errors.hpp"
#include "primspec/graph_io.hpp"
#include "primspec/ideals.hpp"
#include "primspec/json_io.hpp"
#include "primspec/prim_space.hpp"
#include "primspec/subsets.hpp"
#include "primspec/topology.hpp"

namespace primspec::cli {
namespace {

using json::Json;

struct Options {
  std::string graph_path;
  std::string format = "json";
  bool label_by_root = false;
  bool pretty = false;
  std::string set;
  std::string k;
  std::string b;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read graph file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(std::ostream& out, const Json& j, const Options& opt) {
  out << (opt.pretty ? j.dump(2) : j.dump()) << '\n';
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_label(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + s.members()[i];
  return out + "}";
}

// Covering pairs (i, j), i < j in the order given by leq.
std::vector<std::pair<std::size_t, std::size_t>> hasse(
    std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !leq(i, j) || leq(j, i)) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (k == i || k == j) continue;
        if (leq(i, k) && leq(k, j) && !leq(k, i) && !leq(j, k)) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

void write_graph_dot(std::ostream& out, const Graph& g) {
  out << "digraph E {\n";
  for (const VertexId& v : g.vertices()) out << "  " << quote(v) << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << quote(e.src) << " -> " << quote(e.dst);
    if (e.multiplicity != Cardinality{1})
      out << " [label=" << quote(e.multiplicity.is_omega() ? "∞" : e.multiplicity.to_string())
          << "]";
    out << ";\n";
  }
  out << "}\n";
}

void write_hasse_dot(std::ostream& out, const std::string& name,
                     const std::vector<std::string>& labels,
                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  out << "digraph " << name << " {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out << "  n" << i << " [label=" << quote(labels[i]) << "];\n";
  for (const auto& [a, b] : covers) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
}

Json hasse_json(const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  Json out = Json::array();
  for (const auto& [a, b] : covers) out.push_back(Json::array({a, b}));
  return out;
}

VertexSet parse_vertex_list(const Graph& g, const std::string& text) {
  std::vector<VertexId> names;
  std::string trimmed = text;
  trimmed.erase(0, trimmed.find_first_not_of(" \t"));
  if (!trimmed.empty() && trimmed.front() == '[') {
    try {
      names = Json::parse(trimmed).get<std::vector<VertexId>>();
    } catch (const Json::exception& ex) {
      throw ValidationError(std::string("invalid vertex list: ") + ex.what());
    }
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      if (!item.empty()) names.push_back(item);
    }
  }
  VertexSet s(std::move(names));
  g.mask_of(s);
  return s;
}

std::string node_label(const PrimSpace& space, const PrimNode& node) {
  if (const auto* t = std::get_if<GaugeTail>(&node)) return space.tail_id(t->tail);
  if (const auto* b = std::get_if<BreakingVertex>(&node)) return b->vertex;
  return space.tail_id(std::get<CircleFamily>(node).tail) + " ×𝕋";
}

// --- subcommands -----------------------------------------------------------

void cmd_parse(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const Graph& g = space.graph();
  if (opt.format == "text") {
    out << format_graph(g);
  } else if (opt.format == "dot") {
    write_graph_dot(out, g);
  } else {
    emit(out,
         Json{{"schema", json::schema},
              {"graph", json::to_json(g)},
              {"row_finite", is_row_finite(g)}},
         opt);
  }
}

void cmd_tails(const PrimSpace& space, const Options& opt, std::ostream& out) {
  if (opt.format != "text") {
    emit(out, json::tails_report(space), opt);
    return;
  }
  for (std::size_t i = 0; i < space.tails().size(); ++i) {
    const TailData& d = space.tails()[i];
    out << space.tail_id(i) << ' ' << d.tail.vertices.to_string();
    if (d.tail.is_tau()) {
      out << " tau loop=(";
      for (std::size_t k = 0; k < d.tail.loop->vertices.size(); ++k)
        out << (k ? " " : "") << d.tail.loop->vertices[k];
      out << ") K_M=" << d.k_m.to_string() << " B_M=" << d.b_m.to_string();
    } else {
      out << " gamma";
    }
    if (!d.m_inf_empty.empty()) out << " M_inf_empty=" << d.m_inf_empty.to_string();
    out << '\n';
  }
}

void cmd_bv(const PrimSpace& space, const Options& opt, std::ostream& out) {
  if (opt.format == "text") {
    out << space.breaking_vertices().to_string() << '\n';
  } else {
    emit(out,
         Json{{"schema", json::schema},
              {"bv", json::to_json(space.breaking_vertices())}},
         opt);
  }
}

void cmd_hs(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const std::vector<VertexSet> hs = enumerate_hs(space.graph());
  const auto covers = hasse(hs.size(), [&](std::size_t i, std::size_t j) {
    return hs[i].is_subset_of(hs[j]);
  });
  if (opt.format == "dot") {
    std::vector<std::string> labels;
    for (const VertexSet& k : hs) labels.push_back(set_label(k));
    write_hasse_dot(out, "hs", labels, covers);
  } else if (opt.format == "text") {
    for (std::size_t i = 0; i < hs.size(); ++i)
      out << i << ' ' << hs[i].to_string() << '\n';
  } else {
    Json sets = Json::array();
    for (const VertexSet& k : hs) sets.push_back(json::to_json(k));
    emit(out,
         Json{{"schema", json::schema}, {"hs", sets}, {"hasse", hasse_json(covers)}},
         opt);
  }
}

void cmd_ideals(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const std::vector<GaugeInvariantIdeal> ideals = enumerate_gi_ideals(space.graph());
  const auto covers = hasse(ideals.size(), [&](std::size_t i, std::size_t j) {
    return gi_contains(ideals[i], ideals[j]);
  });
  if (opt.format == "dot") {
    std::vector<std::string> labels;
    for (const auto& j : ideals)
      labels.push_back("K=" + set_label(j.k()) + " B=" + set_label(j.b()));
    write_hasse_dot(out, "ideals", labels, covers);
  } else if (opt.format == "text") {
    for (std::size_t i = 0; i < ideals.size(); ++i)
      out << i << ' ' << ideals[i].to_string() << '\n';
  } else {
    Json list = Json::array();
    for (const auto& j : ideals) list.push_back(json::to_json(j));
    emit(out,
         Json{{"schema", json::schema}, {"ideals", list}, {"hasse", hasse_json(covers)}},
         opt);
  }
}

void cmd_prim(const PrimSpace& space, const Options& opt, std::ostream& out) {
  if (opt.format != "text") {
    emit(out, json::prim_report(space), opt);
    return;
  }
  const Graph& g = space.graph();
  for (std::size_t i : space.gamma_indices()) {
    const VertexSet& m = space.tails()[i].tail.vertices;
    out << "gamma " << space.tail_id(i) << ' ' << m.to_string() << " -> "
        << gamma_ideal(g, m).to_string() << '\n';
  }
  for (const VertexId& v : space.breaking_vertices())
    out << "bv " << v << " -> " << breaking_vertex_ideal(g, v).to_string() << '\n';
  for (std::size_t i : space.tau_indices()) {
    const Sandwich& s = space.sandwich(i);
    out << "tau " << space.tail_id(i) << ' ' << space.tails()[i].tail.vertices.to_string()
        << " x T, " << s.lower.to_string() << " < R < " << s.upper.to_string() << '\n';
  }
}

void cmd_closure(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const PrimSubset s = json::parse_prim_subset(space, opt.set);
  const PrimSubset c = closure(space, s);
  if (opt.format == "text") {
    for (const VertexSet& m : c.gamma) out << "gamma " << space.tail_id(m) << '\n';
    for (const VertexId& v : c.bv) out << "bv " << v << '\n';
    for (std::size_t i : space.tau_indices()) {
      auto it = c.circle.find(space.tails()[i].tail.vertices);
      if (it != c.circle.end())
        out << "circle " << space.tail_id(i) << ' ' << it->second.to_string() << '\n';
    }
  } else {
    emit(out, json::to_json(space, c), opt);
  }
}

void cmd_order(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const std::vector<PrimNode> nodes = prim_nodes(space);
  const std::vector<OrderPair> pairs = specialization_order(space);
  auto index = [&](const PrimNode& n) {
    return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), n) - nodes.begin());
  };
  if (opt.format == "dot") {
    out << "digraph order {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const bool family = std::holds_alternative<CircleFamily>(nodes[i]);
      out << "  n" << i << " [label=" << quote(node_label(space, nodes[i]))
          << (family ? ", shape=ellipse" : ", shape=box") << "];\n";
    }
    for (const OrderPair& p : pairs) {
      if (p.from == p.to && !p.parameter_matched) continue;
      out << "  n" << index(p.from) << " -> n" << index(p.to);
      if (p.parameter_matched) out << " [label=\"t = z\", style=dashed]";
      out << ";\n";
    }
    out << "}\n";
  } else if (opt.format == "text") {
    for (const OrderPair& p : pairs)
      out << node_label(space, p.from) << " <= " << node_label(space, p.to)
          << (p.parameter_matched ? " (same parameter)" : "") << '\n';
  } else {
    Json jn = Json::array();
    for (const PrimNode& n : nodes) jn.push_back(json::to_json(space, n));
    Json jp = Json::array();
    for (const OrderPair& p : pairs)
      jp.push_back(Json{{"from", index(p.from)},
                        {"to", index(p.to)},
                        {"parameter_matched", p.parameter_matched}});
    emit(out, Json{{"schema", json::schema}, {"nodes", jn}, {"pairs", jp}}, opt);
  }
}

void cmd_quotient(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const Graph& g = space.graph();
  const GaugeInvariantIdeal j = GaugeInvariantIdeal::make(
      g, parse_vertex_list(g, opt.k), parse_vertex_list(g, opt.b));
  const Graph q = quotient_graph(g, j);
  if (opt.format == "text") {
    out << format_graph(q);
  } else if (opt.format == "dot") {
    write_graph_dot(out, q);
  } else {
    emit(out,
         Json{{"schema", json::schema}, {"ideal", json::to_json(j)}, {"graph", json::to_json(q)}},
         opt);
  }
}

void cmd_simple(const PrimSpace& space, const Options& opt, std::ostream& out) {
  const bool simple = is_simple(space.graph());
  if (opt.format == "text") {
    out << (simple ? "simple" : "not simple") << '\n';
  } else {
    emit(out, Json{{"schema", json::schema}, {"simple", simple}}, opt);
  }
}

int report_error(std::ostream& out, const std::string& kind, const std::string& message,
                 int code, const Json& extra = Json::object()) {
  Json err{{"kind", kind}, {"message", message}};
  for (const auto& [k, v] : extra.items()) err[k] = v;
  out << Json{{"error", err}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Options opt;
  CLI::App app{"Primitive ideal space of a graph C*-algebra"};
  app.require_subcommand(1, 1);
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_flag("--label-by-root", opt.label_by_root,
               "Name tails M_x after a root vertex x instead of M1, M2, ...");
  app.add_flag("--pretty", opt.pretty, "Indent JSON output");

  using Handler = std::function<void(const PrimSpace&, const Options&, std::ostream&)>;
  struct Command {
    const char* name;
    const char* help;
    Handler handler;
    std::vector<std::string> formats;
  };
  const std::vector<Command> commands = {
      {"parse", "Validate and normalize a graph", cmd_parse, {"json", "text", "dot"}},
      {"tails", "Maximal tails with L_M, K_M, B_M", cmd_tails, {"json", "text"}},
      {"bv", "Breaking vertices", cmd_bv, {"json", "text"}},
      {"hs", "Lattice of hereditary saturated sets", cmd_hs, {"json", "text", "dot"}},
      {"ideals", "Lattice of gauge-invariant ideals", cmd_ideals, {"json", "text", "dot"}},
      {"prim", "Primitive ideal space", cmd_prim, {"json", "text"}},
      {"closure", "Closure of a subset of Prim", cmd_closure, {"json", "text"}},
      {"order", "Specialization preorder", cmd_order, {"json", "text", "dot"}},
      {"quotient", "Quotient graph for an ideal J_{K,B}", cmd_quotient, {"json", "text", "dot"}},
      {"simple", "Simplicity test", cmd_simple, {"json", "text"}},
  };
  std::vector<CLI::App*> subs;
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--graph", opt.graph_path, "Graph file")->required();
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    sub->add_flag("--label-by-root", opt.label_by_root, "Name tails after a root vertex");
    sub->add_flag("--pretty", opt.pretty, "Indent JSON output");
    if (std::string(c.name) == "closure")
      sub->add_option("--set", opt.set, "Subset as JSON or gamma:..;bv:..;circle:M=..")
          ->required();
    if (std::string(c.name) == "quotient") {
      sub->add_option("--K", opt.k, "K as a comma-separated list or JSON array")->required();
      sub->add_option("--B", opt.b, "B as a comma-separated list or JSON array");
    }
    subs.push_back(sub);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    return report_error(out, "usage", e.what(), invalid_input);
  }

  for (std::size_t i = 0; i < commands.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    const Command& c = commands[i];
    if (std::find(c.formats.begin(), c.formats.end(), opt.format) == c.formats.end())
      return report_error(out, "usage",
                          "format '" + opt.format + "' is not available for " + c.name,
                          invalid_input);
    try {
      const Graph g = parse_graph(read_file(opt.graph_path));
      const PrimSpace space(g, opt.label_by_root ? TailNaming::root : TailNaming::index);
      c.handler(space, opt, out);
      return ok;
    } catch (const ParseError& e) {
      return report_error(out, "parse", e.message(), invalid_input,
                          Json{{"line", e.line()}, {"column", e.column()}});
    } catch (const InadmissibleIdeal& e) {
      return report_error(out, "inadmissible", e.what(), inadmissible_ideal);
    } catch (const UsageError& e) {
      return report_error(out, "io", e.what(), invalid_input);
    } catch (const ValidationError& e) {
      return report_error(out, "validation", e.what(), invalid_input);
    }
  }
  return report_error(out, "usage", "no subcommand given", invalid_input);
}

}  // namespace primspec::cli
