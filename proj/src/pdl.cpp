#include "anpsi/pdl.hpp"

#include <cctype>

namespace anpsi {

bool eval_pdl(const Assertion& psi, const PdlQuery& q) {
  switch (q.kind) {
    case PdlQuery::Kind::Happened:
      for (const ActionRecord& r : psi.done)
        if (q.first.matches(r)) return true;
      return false;
    case PdlQuery::Kind::Before:
      for (const ActionRecord& a : psi.done) {
        if (!q.first.matches(a)) continue;
        for (const ActionRecord& b : psi.done) {
          if (!q.second.matches(b)) continue;
          if (psi.depends.contains({a.event, b.event})) return true;
        }
      }
      return false;
  }
  return false;
}

namespace {

struct QueryLexer {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
            text[pos] == '\''))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
};

}  // namespace

std::optional<PdlQuery> parse_pdl_query(std::string_view text, std::string& error) {
  QueryLexer lex{text};
  std::string head = lex.ident();
  PdlQuery q;
  if (head == "happened") {
    q.kind = PdlQuery::Kind::Happened;
    if (!lex.eat('(')) { error = "expected '(' after 'happened'"; return std::nullopt; }
    q.first.event = lex.ident();
    if (q.first.event.empty()) { error = "expected event id"; return std::nullopt; }
    if (!lex.eat(')')) { error = "expected ')'"; return std::nullopt; }
  } else if (head == "before") {
    q.kind = PdlQuery::Kind::Before;
    if (!lex.eat('(')) { error = "expected '(' after 'before'"; return std::nullopt; }
    q.first.event = lex.ident();
    if (q.first.event.empty()) { error = "expected first event id"; return std::nullopt; }
    if (!lex.eat(',')) { error = "expected ',' between event ids"; return std::nullopt; }
    q.second.event = lex.ident();
    if (q.second.event.empty()) { error = "expected second event id"; return std::nullopt; }
    if (!lex.eat(')')) { error = "expected ')'"; return std::nullopt; }
  } else {
    error = "expected 'happened(...)' or 'before(...)'";
    return std::nullopt;
  }
  if (!lex.at_end()) {
    error = "trailing characters after query";
    return std::nullopt;
  }
  return q;
}

}  // namespace anpsi
