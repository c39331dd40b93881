#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gpd/group.hpp"
#include "gpd/report.hpp"

namespace gpd::dsl {

// ---------------------------------------------------------------------------
// Document model. Tables are stored canonically (std::map order, sorted
// carriers), so parse . serialize is the identity on well-formed
// documents and serialize . parse is idempotent on valid texts.
// ---------------------------------------------------------------------------

struct GroupDecl {
  std::string name;
  std::vector<Id> elements;
  Id identity;
  PairTable table;

  friend bool operator==(const GroupDecl&, const GroupDecl&) = default;
};

struct GgdDecl {
  std::string name;
  std::string object_group;
  std::vector<Id> arrows;
  IdTable src;
  IdTable tgt;
  PairTable compose;
  PairTable add;

  friend bool operator==(const GgdDecl&, const GgdDecl&) = default;
};

struct MorphismDecl {
  std::string name;
  std::string domain;
  std::string codomain;
  IdTable object_map;
  IdTable arrow_map;

  friend bool operator==(const MorphismDecl&, const MorphismDecl&) = default;
};

struct ActionDecl {
  std::string name;
  std::string groupoid;
  std::string group;
  IdTable anchor;
  PairTable act;

  friend bool operator==(const ActionDecl&, const ActionDecl&) = default;
};

using Decl = std::variant<GroupDecl, GgdDecl, MorphismDecl, ActionDecl>;

struct Document {
  std::vector<Decl> decls;

  const GroupDecl* find_group(const std::string& name) const {
    for (const auto& d : decls)
      if (auto* g = std::get_if<GroupDecl>(&d); g && g->name == name) return g;
    return nullptr;
  }
  const GgdDecl* find_ggd(const std::string& name) const {
    for (const auto& d : decls)
      if (auto* g = std::get_if<GgdDecl>(&d); g && g->name == name) return g;
    return nullptr;
  }
  const MorphismDecl* find_morphism(const std::string& name) const {
    for (const auto& d : decls)
      if (auto* m = std::get_if<MorphismDecl>(&d); m && m->name == name)
        return m;
    return nullptr;
  }
  const ActionDecl* find_action(const std::string& name) const {
    for (const auto& d : decls)
      if (auto* a = std::get_if<ActionDecl>(&d); a && a->name == name)
        return a;
    return nullptr;
  }

  friend bool operator==(const Document&, const Document&) = default;
};

struct SourceDiagnostic {
  std::string message;
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string token;
};

struct ParseResult {
  std::optional<Document> document;
  std::vector<SourceDiagnostic> diagnostics;

  bool ok() const { return document.has_value() && diagnostics.empty(); }
};

// ---------------------------------------------------------------------------
// Lexer. Tokens: identifiers [A-Za-z0-9_]+, punctuation { } ( ) ; : ,
// . + = and the arrow ->. Comments run from '#' to end of line.
// ---------------------------------------------------------------------------

namespace detail {

struct Token {
  enum class Kind { ident, punct, arrow, eof };
  Kind kind = Kind::eof;
  std::string text;
  int line = 1;
  int column = 1;
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Returns tokens, or a diagnostic on a stray character.
  std::optional<SourceDiagnostic> run(std::vector<Token>& out) {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        column_ = 1;
        ++pos_;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (ident_char(c)) {
        Token t{Token::Kind::ident, "", line_, column_};
        while (pos_ < text_.size() && ident_char(text_[pos_])) {
          t.text += text_[pos_];
          advance();
        }
        out.push_back(std::move(t));
        continue;
      }
      if (c == '-') {
        Token t{Token::Kind::arrow, "->", line_, column_};
        advance();
        if (pos_ >= text_.size() || text_[pos_] != '>')
          return SourceDiagnostic{"expected '>' after '-'", t.line, t.column,
                                  "-"};
        advance();
        out.push_back(std::move(t));
        continue;
      }
      if (std::string("{}();:,.+=").find(c) != std::string::npos) {
        out.push_back({Token::Kind::punct, std::string(1, c), line_, column_});
        advance();
        continue;
      }
      return SourceDiagnostic{"unexpected character", line_, column_,
                              std::string(1, c)};
    }
    out.push_back({Token::Kind::eof, "", line_, column_});
    return std::nullopt;
  }

 private:
  void advance() {
    ++pos_;
    ++column_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

// Recursive-descent parser over the token stream. Stops at the first
// syntax error; reference resolution and duplicate checks collect all
// findings afterwards.
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParseResult run() {
    ParseResult result;
    Document doc;
    while (!at_eof()) {
      if (!parse_decl(doc)) {
        result.diagnostics = std::move(diagnostics_);
        return result;
      }
    }
    check_names(doc);
    resolve_references(doc);
    if (diagnostics_.empty()) result.document = std::move(doc);
    result.diagnostics = std::move(diagnostics_);
    if (!result.diagnostics.empty()) result.document.reset();
    return result;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  bool at_eof() const { return peek().kind == Token::Kind::eof; }

  void fail(const std::string& message, const Token& t) {
    diagnostics_.push_back({message, t.line, t.column, t.text});
  }

  bool eat_punct(const char* text) {
    const Token& t = peek();
    if ((t.kind == Token::Kind::punct && t.text == text) ||
        (t.kind == Token::Kind::arrow && std::string(text) == "->")) {
      ++pos_;
      return true;
    }
    fail(std::string("expected '") + text + "'", t);
    return false;
  }

  bool eat_ident(std::string& out) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) {
      fail("expected identifier", t);
      return false;
    }
    out = t.text;
    ++pos_;
    return true;
  }

  // Matches a specific keyword identifier.
  bool eat_keyword(const char* word) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident || t.text != word) {
      fail(std::string("expected '") + word + "'", t);
      return false;
    }
    ++pos_;
    return true;
  }

  bool at_section(const char* word) const {
    return peek().kind == Token::Kind::ident && peek().text == word &&
           peek(1).kind == Token::Kind::punct && peek(1).text == ":";
  }
  bool at_close() const {
    return peek().kind == Token::Kind::punct && peek().text == "}";
  }

  bool parse_decl(Document& doc) {
    const Token& t = peek();
    if (t.kind != Token::Kind::ident) {
      fail("expected declaration", t);
      return false;
    }
    if (t.text == "group") return parse_group(doc);
    if (t.text == "groupgroupoid") return parse_ggd(doc);
    if (t.text == "morphism") return parse_morphism(doc);
    if (t.text == "action") return parse_action(doc);
    fail("unknown declaration kind", t);
    return false;
  }

  void record_name(const char* kind, const std::string& name,
                   const Token& tok) {
    names_.push_back({kind, name, tok.line, tok.column});
  }

  bool parse_group(Document& doc) {
    GroupDecl decl;
    if (!eat_keyword("group")) return false;
    const Token& name_tok = peek();
    if (!eat_ident(decl.name) || !eat_punct("{")) return false;
    record_name("group", decl.name, name_tok);
    if (!eat_keyword("elements") || !eat_punct(":")) return false;
    std::set<Id> seen;
    while (true) {
      const Token& t = peek();
      Id element;
      if (!eat_ident(element)) return false;
      if (!seen.insert(element).second)
        diagnostics_.push_back(
            {"DuplicateElement", t.line, t.column, element});
      decl.elements.push_back(element);
      if (peek().kind == Token::Kind::punct && peek().text == ",") {
        ++pos_;
        continue;
      }
      break;
    }
    if (!eat_punct(";")) return false;
    if (!eat_keyword("identity") || !eat_punct(":") ||
        !eat_ident(decl.identity) || !eat_punct(";"))
      return false;
    if (!eat_keyword("table") || !eat_punct(":")) return false;
    while (!at_close()) {
      Id a, b, c;
      const Token& t = peek();
      if (!eat_ident(a) || !eat_punct("+") || !eat_ident(b) ||
          !eat_punct("=") || !eat_ident(c) || !eat_punct(";"))
        return false;
      if (!decl.table.emplace(std::pair{a, b}, c).second)
        diagnostics_.push_back({"DuplicateEntry", t.line, t.column, a});
    }
    if (!eat_punct("}")) return false;
    std::sort(decl.elements.begin(), decl.elements.end());
    decl.elements.erase(
        std::unique(decl.elements.begin(), decl.elements.end()),
        decl.elements.end());
    doc.decls.push_back(std::move(decl));
    return true;
  }

  bool parse_ggd(Document& doc) {
    GgdDecl decl;
    if (!eat_keyword("groupgroupoid")) return false;
    const Token& name_tok = peek();
    if (!eat_ident(decl.name) || !eat_punct("{")) return false;
    record_name("groupgroupoid", decl.name, name_tok);
    if (!eat_keyword("objects") || !eat_punct(":") || !eat_keyword("group"))
      return false;
    const Token& ref = peek();
    if (!eat_ident(decl.object_group)) return false;
    references_.push_back({"group", decl.object_group, ref.line, ref.column});
    if (!eat_punct(";")) return false;

    if (!eat_keyword("arrows") || !eat_punct(":")) return false;
    std::set<Id> seen;
    while (!at_section("compose")) {
      Id a, s, t;
      const Token& tok = peek();
      if (!eat_ident(a) || !eat_punct(":") || !eat_ident(s) ||
          !eat_punct("->") || !eat_ident(t) || !eat_punct(";"))
        return false;
      if (!seen.insert(a).second)
        diagnostics_.push_back({"DuplicateArrow", tok.line, tok.column, a});
      decl.arrows.push_back(a);
      decl.src[a] = s;
      decl.tgt[a] = t;
    }
    if (!eat_keyword("compose") || !eat_punct(":")) return false;
    while (!at_section("add")) {
      Id b, a, c;
      const Token& tok = peek();
      if (!eat_ident(b) || !eat_punct(".") || !eat_ident(a) ||
          !eat_punct("=") || !eat_ident(c) || !eat_punct(";"))
        return false;
      if (!decl.compose.emplace(std::pair{b, a}, c).second)
        diagnostics_.push_back({"DuplicateEntry", tok.line, tok.column, b});
    }
    if (!eat_keyword("add") || !eat_punct(":")) return false;
    while (!at_close()) {
      Id a, b, c;
      const Token& tok = peek();
      if (!eat_ident(a) || !eat_punct("+") || !eat_ident(b) ||
          !eat_punct("=") || !eat_ident(c) || !eat_punct(";"))
        return false;
      if (!decl.add.emplace(std::pair{a, b}, c).second)
        diagnostics_.push_back({"DuplicateEntry", tok.line, tok.column, a});
    }
    if (!eat_punct("}")) return false;
    std::sort(decl.arrows.begin(), decl.arrows.end());
    decl.arrows.erase(std::unique(decl.arrows.begin(), decl.arrows.end()),
                      decl.arrows.end());
    doc.decls.push_back(std::move(decl));
    return true;
  }

  bool parse_morphism(Document& doc) {
    MorphismDecl decl;
    if (!eat_keyword("morphism")) return false;
    const Token& name_tok = peek();
    if (!eat_ident(decl.name) || !eat_punct(":")) return false;
    record_name("morphism", decl.name, name_tok);
    const Token& dom = peek();
    if (!eat_ident(decl.domain)) return false;
    references_.push_back({"groupgroupoid", decl.domain, dom.line, dom.column});
    if (!eat_punct("->")) return false;
    const Token& cod = peek();
    if (!eat_ident(decl.codomain)) return false;
    references_.push_back(
        {"groupgroupoid", decl.codomain, cod.line, cod.column});
    if (!eat_punct("{")) return false;
    if (!eat_keyword("objects") || !eat_punct(":")) return false;
    while (!at_section("arrows")) {
      if (!parse_map_entry(decl.object_map)) return false;
    }
    if (!eat_keyword("arrows") || !eat_punct(":")) return false;
    while (!at_close()) {
      if (!parse_map_entry(decl.arrow_map)) return false;
    }
    if (!eat_punct("}")) return false;
    doc.decls.push_back(std::move(decl));
    return true;
  }

  bool parse_map_entry(IdTable& table) {
    Id from, to;
    const Token& tok = peek();
    if (!eat_ident(from) || !eat_punct("->") || !eat_ident(to) ||
        !eat_punct(";"))
      return false;
    if (!table.emplace(from, to).second)
      diagnostics_.push_back({"DuplicateEntry", tok.line, tok.column, from});
    return true;
  }

  bool parse_action(Document& doc) {
    ActionDecl decl;
    if (!eat_keyword("action")) return false;
    const Token& name_tok = peek();
    if (!eat_ident(decl.name) || !eat_punct("{")) return false;
    record_name("action", decl.name, name_tok);
    if (!eat_keyword("groupoid") || !eat_punct(":")) return false;
    const Token& gref = peek();
    if (!eat_ident(decl.groupoid)) return false;
    references_.push_back(
        {"groupgroupoid", decl.groupoid, gref.line, gref.column});
    if (!eat_punct(";")) return false;
    if (!eat_keyword("group") || !eat_punct(":")) return false;
    const Token& mref = peek();
    if (!eat_ident(decl.group)) return false;
    references_.push_back({"group", decl.group, mref.line, mref.column});
    if (!eat_punct(";")) return false;
    if (!eat_keyword("anchor") || !eat_punct(":")) return false;
    while (!at_section("act")) {
      if (!parse_map_entry(decl.anchor)) return false;
    }
    if (!eat_keyword("act") || !eat_punct(":")) return false;
    while (!at_close()) {
      Id a, x, y;
      const Token& tok = peek();
      if (!eat_punct("(") || !eat_ident(a) || !eat_punct(",") ||
          !eat_ident(x) || !eat_punct(")") || !eat_punct("=") ||
          !eat_ident(y) || !eat_punct(";"))
        return false;
      if (!decl.act.emplace(std::pair{a, x}, y).second)
        diagnostics_.push_back({"DuplicateEntry", tok.line, tok.column, a});
    }
    if (!eat_punct("}")) return false;
    doc.decls.push_back(std::move(decl));
    return true;
  }

  void check_names(const Document&) {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& n : names_)
      if (!seen.insert({n.kind, n.name}).second)
        diagnostics_.push_back({"DuplicateName: " + n.kind + " " + n.name,
                                n.line, n.column, n.name});
  }

  void resolve_references(const Document& doc) {
    for (const auto& ref : references_) {
      bool found = ref.kind == "group" ? doc.find_group(ref.name) != nullptr
                                       : doc.find_ggd(ref.name) != nullptr;
      if (!found)
        diagnostics_.push_back({"UnresolvedReference: " + ref.kind + " " +
                                    ref.name,
                                ref.line, ref.column, ref.name});
    }
  }

  struct Reference {
    std::string kind;
    std::string name;
    int line;
    int column;
  };

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::vector<SourceDiagnostic> diagnostics_;
  std::vector<Reference> references_;
  std::vector<Reference> names_;
};

}  // namespace detail

inline ParseResult parse(std::string_view text) {
  std::vector<detail::Token> tokens;
  detail::Lexer lexer(text);
  if (auto diag = lexer.run(tokens)) {
    ParseResult result;
    result.diagnostics.push_back(*diag);
    return result;
  }
  return detail::Parser(std::move(tokens)).run();
}

// ---------------------------------------------------------------------------
// Canonical serializer: LF line endings, two-space indentation per
// nesting level, single spaces between tokens, tables in sorted order.
// ---------------------------------------------------------------------------

namespace detail {

inline void write_group(std::string& out, const GroupDecl& d) {
  out += "group " + d.name + " {\n";
  out += "  elements: ";
  for (std::size_t i = 0; i < d.elements.size(); ++i) {
    if (i) out += ", ";
    out += d.elements[i];
  }
  out += ";\n";
  out += "  identity: " + d.identity + ";\n";
  out += "  table:\n";
  for (const auto& [key, c] : d.table)
    out += "    " + key.first + " + " + key.second + " = " + c + ";\n";
  out += "}\n";
}

inline void write_ggd(std::string& out, const GgdDecl& d) {
  out += "groupgroupoid " + d.name + " {\n";
  out += "  objects: group " + d.object_group + ";\n";
  out += "  arrows:\n";
  for (const auto& a : d.arrows)
    out += "    " + a + ": " + d.src.at(a) + " -> " + d.tgt.at(a) + ";\n";
  out += "  compose:\n";
  for (const auto& [key, c] : d.compose)
    out += "    " + key.first + " . " + key.second + " = " + c + ";\n";
  out += "  add:\n";
  for (const auto& [key, c] : d.add)
    out += "    " + key.first + " + " + key.second + " = " + c + ";\n";
  out += "}\n";
}

inline void write_morphism(std::string& out, const MorphismDecl& d) {
  out += "morphism " + d.name + " : " + d.domain + " -> " + d.codomain +
         " {\n";
  out += "  objects:\n";
  for (const auto& [from, to] : d.object_map)
    out += "    " + from + " -> " + to + ";\n";
  out += "  arrows:\n";
  for (const auto& [from, to] : d.arrow_map)
    out += "    " + from + " -> " + to + ";\n";
  out += "}\n";
}

inline void write_action(std::string& out, const ActionDecl& d) {
  out += "action " + d.name + " {\n";
  out += "  groupoid: " + d.groupoid + ";\n";
  out += "  group: " + d.group + ";\n";
  out += "  anchor:\n";
  for (const auto& [from, to] : d.anchor)
    out += "    " + from + " -> " + to + ";\n";
  out += "  act:\n";
  for (const auto& [key, y] : d.act)
    out += "    (" + key.first + ", " + key.second + ") = " + y + ";\n";
  out += "}\n";
}

}  // namespace detail

inline std::string serialize(const Document& doc) {
  std::string out;
  for (const auto& d : doc.decls)
    std::visit(
        [&](const auto& decl) {
          using T = std::decay_t<decltype(decl)>;
          if constexpr (std::is_same_v<T, GroupDecl>)
            detail::write_group(out, decl);
          else if constexpr (std::is_same_v<T, GgdDecl>)
            detail::write_ggd(out, decl);
          else if constexpr (std::is_same_v<T, MorphismDecl>)
            detail::write_morphism(out, decl);
          else
            detail::write_action(out, decl);
        },
        d);
  return out;
}

}  // namespace gpd::dsl
