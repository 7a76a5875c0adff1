#include "primspec/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

#include "primspec/errors.hpp"

namespace primspec {
namespace {

enum class Tok { ident, number, symbol, arrow, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space_and_comments();
    const std::size_t line = line_, column = column_;
    if (pos_ >= text_.size()) return {Tok::end, "", line, column};
    const char c = text_[pos_];
    if (is_word_char(c)) {
      std::size_t start = pos_;
      bool digits_only = true;
      while (pos_ < text_.size() && is_word_char(text_[pos_])) {
        digits_only = digits_only && std::isdigit(
            static_cast<unsigned char>(text_[pos_]));
        advance();
      }
      return {digits_only ? Tok::number : Tok::ident,
              std::string(text_.substr(start, pos_ - start)), line, column};
    }
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      advance();
      advance();
      return {Tok::arrow, "->", line, column};
    }
    if (c == '{' || c == '}' || c == ':' || c == ',' || c == ';' || c == '[' ||
        c == ']') {
      advance();
      return {Tok::symbol, std::string(1, c), line, column};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line,
                     column);
  }

 private:
  static bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  Graph parse() {
    expect_word("graph");
    expect_symbol("{");
    while (!is_symbol("}")) {
      if (cur_.kind == Tok::end) fail("unexpected end of input, expected '}'");
      if (is_word("vertices")) {
        parse_vertices();
      } else if (is_word("edge")) {
        parse_edge();
      } else {
        fail("expected 'vertices:' or 'edge', found '" + cur_.text + "'");
      }
    }
    shift();
    if (cur_.kind != Tok::end) fail("trailing input after graph body");

    std::vector<VertexId> names;
    for (const auto& d : declared_) names.push_back(d.text);
    std::vector<Edge> edges;
    for (const auto& e : edges_) {
      for (const Token* endpoint : {&e.src, &e.dst}) {
        if (!is_declared(endpoint->text))
          throw ParseError("undeclared vertex '" + endpoint->text + "'",
                           endpoint->line, endpoint->column);
      }
      edges.push_back(Edge{e.src.text, e.dst.text, e.multiplicity});
    }
    return Graph(std::move(names), std::move(edges));
  }

 private:
  struct PendingEdge {
    Token src;
    Token dst;
    Cardinality multiplicity;
  };

  void parse_vertices() {
    shift();
    expect_symbol(":");
    for (;;) {
      Token id = expect_id();
      if (is_declared(id.text))
        throw ParseError("duplicate vertex '" + id.text + "'", id.line,
                         id.column);
      declared_.push_back(id);
      if (is_symbol(",")) {
        shift();
        continue;
      }
      break;
    }
    expect_symbol(";");
  }

  void parse_edge() {
    shift();
    Token src = expect_id();
    if (cur_.kind != Tok::arrow) fail("expected '->'");
    shift();
    Token dst = expect_id();
    Cardinality mult{1};
    if (is_symbol("[")) {
      shift();
      if (is_word("inf")) {
        mult = Cardinality::omega();
      } else if (cur_.kind == Tok::number) {
        std::uint64_t n = 0;
        auto [ptr, ec] = std::from_chars(
            cur_.text.data(), cur_.text.data() + cur_.text.size(), n);
        if (ec != std::errc() || n > Cardinality::max_finite)
          fail("multiplicity out of range");
        if (n == 0) fail("multiplicity must be at least 1");
        mult = Cardinality(n);
      } else {
        fail("expected a positive integer or 'inf'");
      }
      shift();
      expect_symbol("]");
    }
    expect_symbol(";");
    edges_.push_back(PendingEdge{src, dst, mult});
  }

  bool is_declared(const std::string& name) const {
    for (const auto& d : declared_)
      if (d.text == name) return true;
    return false;
  }

  void shift() { cur_ = lexer_.next(); }
  bool is_symbol(std::string_view s) const {
    return cur_.kind == Tok::symbol && cur_.text == s;
  }
  bool is_word(std::string_view s) const {
    return cur_.kind == Tok::ident && cur_.text == s;
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, cur_.line, cur_.column);
  }
  void expect_symbol(std::string_view s) {
    if (!is_symbol(s)) fail("expected '" + std::string(s) + "'");
    shift();
  }
  void expect_word(std::string_view s) {
    if (!is_word(s)) fail("expected '" + std::string(s) + "'");
    shift();
  }
  Token expect_id() {
    if (cur_.kind != Tok::ident && cur_.kind != Tok::number)
      fail("expected a vertex name");
    Token t = cur_;
    shift();
    return t;
  }

  Lexer lexer_;
  Token cur_{Tok::end, "", 1, 1};
  std::vector<Token> declared_;
  std::vector<PendingEdge> edges_;
};

}  // namespace

Graph parse_graph(std::string_view text) { return Parser(text).parse(); }

std::string format_graph(const Graph& g) {
  std::string out = "graph {\n";
  if (!g.empty()) {
    out += "  vertices: ";
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (i) out += ", ";
      out += g.name(i);
    }
    out += ";\n";
  }
  for (const auto& e : g.edges()) {
    out += "  edge " + e.src + " -> " + e.dst;
    if (e.multiplicity != Cardinality{1})
      out += " [" + e.multiplicity.to_string() + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace primspec
