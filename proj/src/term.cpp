#include "anpsi/term.hpp"

#include <sstream>
#include <stdexcept>

namespace anpsi {

struct Term::Node {
  Kind kind;
  Name name;               // Leaf: the leaf; Chan: the channel name
  std::string ctor;        // App
  std::vector<Term> args;  // App
  ConfigPath at;           // Chan, Path
};

Term Term::leaf(Name n) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Leaf;
  node->name = n;
  return Term(std::move(node));
}

Term Term::app(std::string ctor, std::vector<Term> args) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::App;
  node->ctor = std::move(ctor);
  node->args = std::move(args);
  return Term(std::move(node));
}

Term Term::tuple(std::vector<Term> parts) { return app(kTupleCtor, std::move(parts)); }

Term Term::chan(ConfigPath at, Name channel) {
  if (channel.sort != Sort::Chan)
    throw std::invalid_argument("Term::chan requires a channel-sorted name");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Chan;
  node->at = std::move(at);
  node->name = channel;
  return Term(std::move(node));
}

Term Term::path(ConfigPath p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Path;
  node->at = std::move(p);
  return Term(std::move(node));
}

Term::Kind Term::kind() const { return node_->kind; }

Name Term::leaf_name() const {
  if (node_->kind != Kind::Leaf) throw std::logic_error("not a leaf term");
  return node_->name;
}

const std::string& Term::ctor() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application term");
  return node_->ctor;
}

std::span<const Term> Term::args() const {
  if (node_->kind != Kind::App) throw std::logic_error("not an application term");
  return node_->args;
}

const ConfigPath& Term::config_path() const {
  if (node_->kind != Kind::Chan && node_->kind != Kind::Path)
    throw std::logic_error("term has no configuration path");
  return node_->at;
}

Name Term::channel_name() const {
  if (node_->kind != Kind::Chan) throw std::logic_error("not a channel term");
  return node_->name;
}

bool Term::is_tuple() const {
  return node_->kind == Kind::App && node_->ctor == kTupleCtor;
}

bool operator==(const Term& a, const Term& b) { return Term::compare(a, b) == 0; }

namespace {

int cmp_names(Name a, Name b) { return a.id < b.id ? -1 : (a.id > b.id ? 1 : 0); }

int cmp_paths(const ConfigPath& a, const ConfigPath& b) {
  if (a.controller.has_value() != b.controller.has_value())
    return a.controller.has_value() ? 1 : -1;
  if (a.controller) {
    if (int c = cmp_names(*a.controller, *b.controller)) return c;
  }
  if (a.path.size() != b.path.size()) return a.path.size() < b.path.size() ? -1 : 1;
  for (size_t i = 0; i < a.path.size(); ++i)
    if (int c = cmp_names(a.path[i], b.path[i])) return c;
  return 0;
}

}  // namespace

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (!a.node_ || !b.node_) return a.node_ ? 1 : -1;
  if (a.node_->kind != b.node_->kind)
    return static_cast<int>(a.node_->kind) < static_cast<int>(b.node_->kind) ? -1 : 1;
  switch (a.node_->kind) {
    case Kind::Leaf:
      return cmp_names(a.node_->name, b.node_->name);
    case Kind::App: {
      if (int c = a.node_->ctor.compare(b.node_->ctor)) return c < 0 ? -1 : 1;
      if (a.node_->args.size() != b.node_->args.size())
        return a.node_->args.size() < b.node_->args.size() ? -1 : 1;
      for (size_t i = 0; i < a.node_->args.size(); ++i)
        if (int c = compare(a.node_->args[i], b.node_->args[i])) return c;
      return 0;
    }
    case Kind::Chan: {
      if (int c = cmp_paths(a.node_->at, b.node_->at)) return c;
      return cmp_names(a.node_->name, b.node_->name);
    }
    case Kind::Path:
      return cmp_paths(a.node_->at, b.node_->at);
  }
  return 0;
}

Substitution::Substitution(std::map<Name, Term> mapping) : map_(std::move(mapping)) {
  for (const auto& [n, t] : map_) {
    if (n.sort != Sort::Var)
      throw std::invalid_argument("substitution domain must be variable-sorted");
    if (!t.valid()) throw std::invalid_argument("substitution range term is empty");
  }
  // Idempotence: range terms must not mention domain variables.
  for (const auto& [n, t] : map_) {
    (void)n;
    for (const auto& [d, unused] : map_) {
      (void)unused;
      if (mentions(t, d))
        throw std::invalid_argument("substitution range mentions a domain variable");
    }
  }
}

const Term* Substitution::lookup(Name n) const {
  auto it = map_.find(n);
  return it == map_.end() ? nullptr : &it->second;
}

NameSet Substitution::range_names() const {
  NameSet out;
  for (const auto& [n, t] : map_) {
    (void)n;
    collect_free_names(t, out);
  }
  return out;
}

void collect_free_names(const Term& t, NameSet& out) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      out.insert(t.leaf_name());
      return;
    case Term::Kind::App:
      for (const Term& a : t.args()) collect_free_names(a, out);
      return;
    case Term::Kind::Chan:
    case Term::Kind::Path: {
      const ConfigPath& p = t.config_path();
      if (p.controller) out.insert(*p.controller);
      for (Name n : p.path) out.insert(n);
      if (t.kind() == Term::Kind::Chan) out.insert(t.channel_name());
      return;
    }
  }
}

NameSet free_names(const Term& t) {
  NameSet out;
  collect_free_names(t, out);
  return out;
}

Term substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Leaf: {
      Name n = t.leaf_name();
      if (n.sort == Sort::Var)
        if (const Term* rep = s.lookup(n)) return *rep;
      return t;
    }
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      bool changed = false;
      for (const Term& a : t.args()) {
        args.push_back(substitute(a, s));
        changed = changed || !(args.back() == a);
      }
      if (!changed) return t;
      return Term::app(t.ctor(), std::move(args));
    }
    case Term::Kind::Chan:
    case Term::Kind::Path:
      // Paths hold config/identity/channel names only; variables cannot occur.
      return t;
  }
  return t;
}

bool mentions(const Term& t, Name n) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      return t.leaf_name() == n;
    case Term::Kind::App:
      for (const Term& a : t.args())
        if (mentions(a, n)) return true;
      return false;
    case Term::Kind::Chan:
    case Term::Kind::Path: {
      const ConfigPath& p = t.config_path();
      if (p.controller && *p.controller == n) return true;
      for (Name m : p.path)
        if (m == n) return true;
      return t.kind() == Term::Kind::Chan && t.channel_name() == n;
    }
  }
  return false;
}

namespace {

bool match_into(const NameSet& vars, const Term& pattern, const Term& value,
                std::map<Name, Term>& bound) {
  if (pattern.kind() == Term::Kind::Leaf) {
    Name n = pattern.leaf_name();
    if (n.sort == Sort::Var && vars.contains(n)) {
      auto [it, inserted] = bound.emplace(n, value);
      return inserted || it->second == value;
    }
    return value.kind() == Term::Kind::Leaf && value.leaf_name() == n;
  }
  if (pattern.kind() != value.kind()) return false;
  switch (pattern.kind()) {
    case Term::Kind::App: {
      if (pattern.ctor() != value.ctor()) return false;
      auto pa = pattern.args(), va = value.args();
      if (pa.size() != va.size()) return false;
      for (size_t i = 0; i < pa.size(); ++i)
        if (!match_into(vars, pa[i], va[i], bound)) return false;
      return true;
    }
    case Term::Kind::Chan:
    case Term::Kind::Path:
      return pattern == value;
    case Term::Kind::Leaf:
      return false;  // unreachable
  }
  return false;
}

}  // namespace

std::optional<Substitution> match_term(const NameSet& vars, const Term& pattern,
                                       const Term& value) {
  std::map<Name, Term> bound;
  if (!match_into(vars, pattern, value, bound)) return std::nullopt;
  // Every pattern variable must occur in the pattern, so `bound` covers vars.
  for (Name v : vars)
    if (!bound.contains(v)) return std::nullopt;
  return Substitution(std::move(bound));
}

namespace {

void print_path(std::ostream& os, const ConfigPath& p, const NameDisplay& disp) {
  if (p.controller) os << disp(*p.controller);
  os << '[';
  for (size_t i = 0; i < p.path.size(); ++i) {
    if (i) os << ',';
    os << disp(p.path[i]);
  }
  os << ']';
}

void print_into(std::ostream& os, const Term& t, const NameDisplay& disp) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      os << disp(t.leaf_name());
      return;
    case Term::Kind::App: {
      if (t.is_tuple()) {
        os << '(';
        for (size_t i = 0; i < t.args().size(); ++i) {
          if (i) os << ", ";
          print_into(os, t.args()[i], disp);
        }
        os << ')';
        return;
      }
      os << t.ctor() << '(';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ", ";
        print_into(os, t.args()[i], disp);
      }
      os << ')';
      return;
    }
    case Term::Kind::Chan:
      print_path(os, t.config_path(), disp);
      os << disp(t.channel_name());
      return;
    case Term::Kind::Path:
      print_path(os, t.config_path(), disp);
      return;
  }
}

}  // namespace

std::string print_term(const Term& t, const NameDisplay& disp) {
  std::ostringstream os;
  print_into(os, t, disp);
  return os.str();
}

std::string print_term(const Term& t, const NameTable& names) {
  return print_term(t, NameDisplay([&names](Name n) { return names.display(n); }));
}

}  // namespace anpsi
