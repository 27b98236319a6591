#include <cctype>

#include "anpsi/ceremony.hpp"

namespace anpsi {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

// Splits one logical line into identifiers and punctuation. Comments were
// stripped by the caller.
bool lex_line(const std::string& line, int lineno, std::vector<Token>& out,
              std::vector<Diagnostic>& diags) {
  size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int col = static_cast<int>(i) + 1;
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' ||
              line[j] == '\''))
        ++j;
      out.push_back(Token{line.substr(i, j - i), col});
      i = j;
      continue;
    }
    switch (c) {
      case '(': case ')': case ',': case '/': case '<': case '.':
        out.push_back(Token{std::string(1, c), col});
        ++i;
        continue;
      case '-':
        if (i + 1 < line.size() && line[i + 1] == '>') {
          out.push_back(Token{"->", col});
          i += 2;
          continue;
        }
        break;
      case '=':
        if (i + 1 < line.size() && line[i + 1] == '=') {
          out.push_back(Token{"==", col});
          i += 2;
          continue;
        }
        out.push_back(Token{"=", col});
        ++i;
        continue;
      default:
        break;
    }
    diags.push_back(Diagnostic{Diagnostic::Severity::Error, lineno, col, "E002",
                               std::string("unexpected character '") + c + "'"});
    return false;
  }
  return true;
}

bool is_ident(const std::string& t) {
  if (t.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(t[0])) && t[0] != '_') return false;
  return true;
}

// Surface term syntax before name resolution.
struct SurfaceTerm {
  std::string head;  // identifier; empty for tuple sugar
  std::vector<SurfaceTerm> args;
  bool is_app = false;
  int line = 0, col = 0;
};

struct Cursor {
  const std::vector<Token>& toks;
  size_t pos = 0;
  int lineno;
  std::vector<Diagnostic>& diags;

  bool done() const { return pos >= toks.size(); }
  const Token* peek() const { return done() ? nullptr : &toks[pos]; }
  const Token* next() { return done() ? nullptr : &toks[pos++]; }

  bool expect(const std::string& text, const std::string& what) {
    const Token* t = next();
    if (t && t->text == text) return true;
    error(t, "expected '" + text + "' " + what);
    return false;
  }

  std::optional<std::string> ident(const std::string& what) {
    const Token* t = next();
    if (t && is_ident(t->text)) return t->text;
    error(t, "expected identifier " + what);
    return std::nullopt;
  }

  void error(const Token* at, const std::string& msg) {
    int col = at ? at->col : (toks.empty() ? 1 : toks.back().col + 1);
    diags.push_back(Diagnostic{Diagnostic::Severity::Error, lineno, col, "E003", msg});
  }
};

std::optional<SurfaceTerm> parse_surface_term(Cursor& cur) {
  const Token* t = cur.peek();
  if (!t) {
    cur.error(nullptr, "expected term");
    return std::nullopt;
  }
  if (t->text == "(") {
    // Tuple sugar: (t1, t2, ...); a single element is just grouping.
    SurfaceTerm tuple;
    tuple.line = cur.lineno;
    tuple.col = t->col;
    cur.next();
    for (;;) {
      auto part = parse_surface_term(cur);
      if (!part) return std::nullopt;
      tuple.args.push_back(std::move(*part));
      const Token* sep = cur.next();
      if (!sep) {
        cur.error(nullptr, "unterminated tuple");
        return std::nullopt;
      }
      if (sep->text == ")") break;
      if (sep->text != ",") {
        cur.error(sep, "expected ',' or ')' in tuple");
        return std::nullopt;
      }
    }
    if (tuple.args.size() == 1) return std::move(tuple.args.front());
    tuple.is_app = true;
    tuple.head.clear();
    return tuple;
  }
  if (!is_ident(t->text)) {
    cur.error(t, "expected term");
    return std::nullopt;
  }
  SurfaceTerm st;
  st.head = t->text;
  st.line = cur.lineno;
  st.col = t->col;
  cur.next();
  if (cur.peek() && cur.peek()->text == "(") {
    cur.next();
    st.is_app = true;
    if (cur.peek() && cur.peek()->text == ")") {
      cur.next();
      return st;  // nullary application
    }
    for (;;) {
      auto part = parse_surface_term(cur);
      if (!part) return std::nullopt;
      st.args.push_back(std::move(*part));
      const Token* sep = cur.next();
      if (!sep) {
        cur.error(nullptr, "unterminated argument list");
        return std::nullopt;
      }
      if (sep->text == ")") break;
      if (sep->text != ",") {
        cur.error(sep, "expected ',' or ')' in argument list");
        return std::nullopt;
      }
    }
  }
  return st;
}

struct SurfaceEvent {
  EventId id;
  EventKind kind;
  std::string config;
  std::string channel;           // Output/Input
  std::string bind;              // Fresh/Compute target
  std::optional<SurfaceTerm> payload;      // Output/Input
  std::optional<SurfaceTerm> compute_rhs;  // Compute
  std::optional<SurfaceTerm> test_lhs, test_rhs;
  std::vector<EventId> deps;
  int line = 0;
};

enum class Section {
  None, Identities, Configs, Channels, Signature, Constants, Events, Run
};

struct RawSpec {
  std::string name;
  std::vector<std::pair<std::string, int>> identities;
  struct RawConfig { std::string name, parent, controller; int line; };
  std::vector<RawConfig> configs;
  struct RawChannel { std::string name, kind, endpoint, peer; int line; };
  std::vector<RawChannel> channels;
  std::vector<CtorDecl> ctors;
  struct RawRule { SurfaceTerm lhs, rhs; int line; };
  std::vector<RawRule> rules;
  struct RawConst { std::string name; std::vector<std::string> placement; int line; };
  std::vector<RawConst> constants;
  std::vector<SurfaceEvent> events;
  std::vector<std::pair<DependPair, int>> run;
};

void parse_after_clause(Cursor& cur, std::vector<EventId>& deps) {
  for (;;) {
    auto id = cur.ident("after 'after'");
    if (!id) return;
    deps.push_back(*id);
    if (cur.peek() && cur.peek()->text == ",") {
      cur.next();
      continue;
    }
    return;
  }
}

void parse_event_line(Cursor& cur, RawSpec& raw) {
  SurfaceEvent ev;
  ev.line = cur.lineno;
  auto id = cur.ident("as event id");
  if (!id) return;
  ev.id = *id;
  auto kind = cur.ident("as event kind");
  if (!kind) return;
  if (*kind == "out" || *kind == "in") {
    ev.kind = *kind == "out" ? EventKind::Output : EventKind::Input;
    auto chan = cur.ident("as channel");
    if (!chan) return;
    ev.channel = *chan;
    if (!cur.expect("at", "before configuration")) return;
    auto cfg = cur.ident("as configuration");
    if (!cfg) return;
    ev.config = *cfg;
    if (!cur.expect("payload", "before payload term")) return;
    ev.payload = parse_surface_term(cur);
    if (!ev.payload) return;
  } else if (*kind == "fresh") {
    ev.kind = EventKind::Fresh;
    auto var = cur.ident("as fresh variable");
    if (!var) return;
    ev.bind = *var;
    if (!cur.expect("at", "before configuration")) return;
    auto cfg = cur.ident("as configuration");
    if (!cfg) return;
    ev.config = *cfg;
  } else if (*kind == "compute") {
    ev.kind = EventKind::Compute;
    auto var = cur.ident("as compute target");
    if (!var) return;
    ev.bind = *var;
    if (!cur.expect("=", "after compute target")) return;
    ev.compute_rhs = parse_surface_term(cur);
    if (!ev.compute_rhs) return;
    if (!cur.expect("at", "before configuration")) return;
    auto cfg = cur.ident("as configuration");
    if (!cfg) return;
    ev.config = *cfg;
  } else if (*kind == "test") {
    ev.kind = EventKind::Test;
    ev.test_lhs = parse_surface_term(cur);
    if (!ev.test_lhs) return;
    if (!cur.expect("==", "between test operands")) return;
    ev.test_rhs = parse_surface_term(cur);
    if (!ev.test_rhs) return;
    if (!cur.expect("at", "before configuration")) return;
    auto cfg = cur.ident("as configuration");
    if (!cfg) return;
    ev.config = *cfg;
  } else {
    cur.error(cur.peek(), "unknown event kind '" + *kind + "'");
    return;
  }
  if (cur.peek() && cur.peek()->text == "after") {
    cur.next();
    parse_after_clause(cur, ev.deps);
  }
  if (!cur.done()) {
    cur.error(cur.peek(), "trailing tokens after event declaration");
    return;
  }
  raw.events.push_back(std::move(ev));
}

// Resolves surface terms against declared constants, constructors and the
// per-configuration binding environment. Unknown identifiers become
// variables; the validator decides whether their use is legal.
struct Resolver {
  CeremonySpec& spec;
  NameTable& names;
  std::vector<Diagnostic>& diags;

  bool is_constant(const std::string& text, Name& out) const {
    for (const ConstantDecl& c : spec.constants)
      if (names.display(c.name) == text) {
        out = c.name;
        return true;
      }
    return false;
  }

  const CtorDecl* find_ctor(const std::string& text) const {
    for (const CtorDecl& c : spec.ctors)
      if (c.name == text) return &c;
    return nullptr;
  }

  Term resolve(const SurfaceTerm& st, bool rule_scope = false) {
    if (st.is_app) {
      std::vector<Term> args;
      args.reserve(st.args.size());
      for (const SurfaceTerm& a : st.args) args.push_back(resolve(a, rule_scope));
      if (st.head.empty()) return Term::tuple(std::move(args));
      const CtorDecl* c = find_ctor(st.head);
      if (!c) {
        diags.push_back(Diagnostic{Diagnostic::Severity::Error, st.line, st.col, "E120",
                                   "unknown constructor '" + st.head + "'"});
      } else if (c->arity != static_cast<int>(args.size())) {
        diags.push_back(Diagnostic{
            Diagnostic::Severity::Error, st.line, st.col, "E120",
            "constructor '" + st.head + "' expects " + std::to_string(c->arity) +
                " arguments, got " + std::to_string(args.size())});
      }
      return Term::app(st.head, std::move(args));
    }
    Name constant;
    if (!rule_scope && is_constant(st.head, constant)) return Term::leaf(constant);
    return Term::leaf(names.intern(Sort::Var, st.head));
  }
};

}  // namespace

ParseResult parse_ceremony(std::string_view source) {
  ParseResult result;
  std::vector<Diagnostic>& diags = result.diagnostics;

  RawSpec raw;
  Section section = Section::None;
  bool saw_ceremony = false;
  bool any_content = false;

  int lineno = 0;
  size_t start = 0;
  while (start <= source.size()) {
    size_t end = source.find('\n', start);
    if (end == std::string_view::npos) end = source.size();
    std::string line(source.substr(start, end - start));
    start = end + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<Token> toks;
    if (!lex_line(line, lineno, toks, diags)) continue;
    if (toks.empty()) continue;
    any_content = true;
    Cursor cur{toks, 0, lineno, diags};

    const std::string& head = toks[0].text;
    if (head == "ceremony") {
      cur.next();
      if (auto n = cur.ident("as ceremony name")) raw.name = *n;
      saw_ceremony = true;
      continue;
    }
    if (head == "identities") {
      cur.next();
      while (!cur.done()) {
        if (auto n = cur.ident("in identities")) raw.identities.emplace_back(*n, lineno);
        else break;
      }
      section = Section::Identities;
      continue;
    }
    if (head == "configs") { section = Section::Configs; continue; }
    if (head == "channels") { section = Section::Channels; continue; }
    if (head == "signature") { section = Section::Signature; continue; }
    if (head == "constants") { section = Section::Constants; continue; }
    if (head == "events") { section = Section::Events; continue; }
    if (head == "run") { section = Section::Run; continue; }

    switch (section) {
      case Section::Configs: {
        RawSpec::RawConfig c;
        c.line = lineno;
        auto n = cur.ident("as configuration name");
        if (!n) break;
        c.name = *n;
        while (!cur.done()) {
          const Token* t = cur.next();
          if (t->text == "parent") {
            if (auto p = cur.ident("after 'parent'")) c.parent = *p;
          } else if (t->text == "controlled") {
            if (auto i = cur.ident("after 'controlled'")) c.controller = *i;
          } else {
            cur.error(t, "expected 'parent' or 'controlled'");
            break;
          }
        }
        raw.configs.push_back(std::move(c));
        break;
      }
      case Section::Channels: {
        RawSpec::RawChannel c;
        c.line = lineno;
        auto n = cur.ident("as channel name");
        if (!n) break;
        c.name = *n;
        if (!cur.expect("kind", "after channel name")) break;
        auto k = cur.ident("as channel kind");
        if (!k) break;
        c.kind = *k;
        if (!cur.expect("at", "before endpoint")) break;
        auto ep = cur.ident("as endpoint configuration");
        if (!ep) break;
        c.endpoint = *ep;
        if (!cur.expect("peer", "before peer")) break;
        auto pr = cur.ident("as peer configuration");
        if (!pr) break;
        c.peer = *pr;
        if (!cur.done()) cur.error(cur.peek(), "trailing tokens after channel");
        raw.channels.push_back(std::move(c));
        break;
      }
      case Section::Signature: {
        if (head == "rule") {
          cur.next();
          auto lhs = parse_surface_term(cur);
          if (!lhs) break;
          if (!cur.expect("->", "between rule sides")) break;
          auto rhs = parse_surface_term(cur);
          if (!rhs) break;
          if (!cur.done()) cur.error(cur.peek(), "trailing tokens after rule");
          raw.rules.push_back(RawSpec::RawRule{std::move(*lhs), std::move(*rhs), lineno});
          break;
        }
        auto n = cur.ident("as constructor name");
        if (!n) break;
        if (!cur.expect("/", "after constructor name")) break;
        const Token* ar = cur.next();
        if (!ar || ar->text.empty() ||
            ar->text.find_first_not_of("0123456789") != std::string::npos) {
          cur.error(ar, "expected arity digits after '/'");
          break;
        }
        if (!cur.done()) cur.error(cur.peek(), "trailing tokens after constructor");
        raw.ctors.push_back(CtorDecl{*n, std::stoi(ar->text), lineno});
        break;
      }
      case Section::Constants: {
        RawSpec::RawConst c;
        c.line = lineno;
        auto n = cur.ident("as constant name");
        if (!n) break;
        c.name = *n;
        if (!cur.expect("at", "before placement")) break;
        while (!cur.done()) {
          if (auto p = cur.ident("as placement configuration")) c.placement.push_back(*p);
          else break;
        }
        raw.constants.push_back(std::move(c));
        break;
      }
      case Section::Events:
        parse_event_line(cur, raw);
        break;
      case Section::Run: {
        auto a = cur.ident("as run pair left event");
        if (!a) break;
        if (!cur.expect("<", "between run pair events")) break;
        auto b = cur.ident("as run pair right event");
        if (!b) break;
        if (!cur.done()) cur.error(cur.peek(), "trailing tokens after run pair");
        raw.run.emplace_back(DependPair{*a, *b}, lineno);
        break;
      }
      case Section::Identities:
      case Section::None:
        diags.push_back(Diagnostic{Diagnostic::Severity::Error, lineno, toks[0].col, "E004",
                                   "statement outside any section"});
        break;
    }
  }

  if (!any_content) {
    diags.push_back(
        Diagnostic{Diagnostic::Severity::Error, 1, 1, "E001", "empty specification"});
    return result;
  }
  if (!saw_ceremony)
    diags.push_back(Diagnostic{Diagnostic::Severity::Error, 1, 1, "E005",
                               "missing 'ceremony <name>' header"});
  if (has_errors(diags)) return result;

  CeremonySpec spec;
  spec.names = std::make_shared<NameTable>();
  NameTable& names = *spec.names;
  spec.name = raw.name;
  for (auto& [text, line] : raw.identities) {
    (void)line;
    spec.identities.push_back(names.intern(Sort::Ident, text));
  }
  for (auto& rc : raw.configs) {
    ConfigDecl c;
    c.line = rc.line;
    c.name = names.intern(Sort::Config, rc.name);
    if (!rc.parent.empty()) c.parent = names.intern(Sort::Config, rc.parent);
    if (!rc.controller.empty()) c.controller = names.intern(Sort::Ident, rc.controller);
    spec.configs.push_back(c);
  }
  for (auto& rc : raw.channels) {
    ChannelDecl c;
    c.line = rc.line;
    c.name = names.intern(Sort::Chan, rc.name);
    c.kind = rc.kind;
    c.endpoint = names.intern(Sort::Config, rc.endpoint);
    c.peer = names.intern(Sort::Config, rc.peer);
    spec.channels.push_back(c);
  }
  spec.ctors = raw.ctors;
  for (auto& rc : raw.constants) {
    ConstantDecl c;
    c.line = rc.line;
    c.name = names.intern(Sort::Msg, rc.name);
    for (auto& p : rc.placement) c.placement.push_back(names.intern(Sort::Config, p));
    spec.constants.push_back(c);
  }

  Resolver resolver{spec, names, diags};
  for (auto& rr : raw.rules) {
    RuleDecl r;
    r.line = rr.line;
    r.lhs = resolver.resolve(rr.lhs, /*rule_scope=*/true);
    r.rhs = resolver.resolve(rr.rhs, /*rule_scope=*/true);
    for (Name n : free_names(r.lhs))
      if (n.sort == Sort::Var) r.variables.insert(n);
    spec.rules.push_back(std::move(r));
  }
  for (auto& se : raw.events) {
    EventDecl e;
    e.line = se.line;
    e.id = se.id;
    e.kind = se.kind;
    e.config = names.intern(Sort::Config, se.config);
    if (!se.channel.empty()) e.channel = names.intern(Sort::Chan, se.channel);
    if (se.payload) e.payload = resolver.resolve(*se.payload);
    if (!se.bind.empty()) e.binds.push_back(names.intern(Sort::Var, se.bind));
    if (se.compute_rhs) e.compute_rhs = resolver.resolve(*se.compute_rhs);
    if (se.test_lhs) e.test_lhs = resolver.resolve(*se.test_lhs);
    if (se.test_rhs) e.test_rhs = resolver.resolve(*se.test_rhs);
    e.deps = se.deps;
    spec.events.push_back(std::move(e));
  }
  for (auto& [pair, line] : raw.run) {
    (void)line;
    spec.desired_run.push_back(pair);
  }

  if (has_errors(diags)) return result;
  result.spec = std::move(spec);
  return result;
}

}  // namespace anpsi
