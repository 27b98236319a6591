#include "anpsi/ceremony.hpp"

#include <sstream>

namespace anpsi {

std::string format_diagnostic(const Diagnostic& d, const std::string& filename) {
  std::ostringstream os;
  os << filename << ':' << d.line << ':' << d.col << ": "
     << (d.severity == Diagnostic::Severity::Error ? "error" : "warning") << '['
     << d.code << "]: " << d.message;
  return os.str();
}

bool has_errors(const std::vector<Diagnostic>& ds) {
  for (const Diagnostic& d : ds)
    if (d.severity == Diagnostic::Severity::Error) return true;
  return false;
}

const ConfigDecl* CeremonySpec::find_config(Name n) const {
  for (const ConfigDecl& c : configs)
    if (c.name == n) return &c;
  return nullptr;
}

const ChannelDecl* CeremonySpec::find_channel(Name n) const {
  for (const ChannelDecl& c : channels)
    if (c.name == n) return &c;
  return nullptr;
}

const EventDecl* CeremonySpec::find_event(const EventId& id) const {
  for (const EventDecl& e : events)
    if (e.id == id) return &e;
  return nullptr;
}

ConfigPath CeremonySpec::config_path(Name config) const {
  std::vector<Name> rev;
  std::optional<Name> cur = config;
  // Cycles are rejected by validation; cap the walk anyway.
  for (size_t i = 0; cur && i <= configs.size(); ++i) {
    rev.push_back(*cur);
    const ConfigDecl* d = find_config(*cur);
    cur = d ? d->parent : std::nullopt;
  }
  ConfigPath p;
  p.path.assign(rev.rbegin(), rev.rend());
  if (const ConfigDecl* d = find_config(config)) p.controller = d->controller;
  return p;
}

RewriteSystem CeremonySpec::rewrite_system() const {
  RewriteSystem rs;
  for (const RuleDecl& r : rules) rs.rules.push_back(RewriteRule{r.lhs, r.rhs, r.variables});
  return rs;
}

namespace {

bool names_equal(Name a, const NameTable& ta, Name b, const NameTable& tb) {
  return a.sort == b.sort && ta.display(a) == tb.display(b);
}

bool terms_equal(const Term& a, const NameTable& ta, const Term& b, const NameTable& tb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::Leaf:
      return names_equal(a.leaf_name(), ta, b.leaf_name(), tb);
    case Term::Kind::App: {
      if (a.ctor() != b.ctor() || a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!terms_equal(a.args()[i], ta, b.args()[i], tb)) return false;
      return true;
    }
    case Term::Kind::Chan:
    case Term::Kind::Path: {
      const ConfigPath& pa = a.config_path();
      const ConfigPath& pb = b.config_path();
      if (pa.controller.has_value() != pb.controller.has_value()) return false;
      if (pa.controller && !names_equal(*pa.controller, ta, *pb.controller, tb)) return false;
      if (pa.path.size() != pb.path.size()) return false;
      for (size_t i = 0; i < pa.path.size(); ++i)
        if (!names_equal(pa.path[i], ta, pb.path[i], tb)) return false;
      if (a.kind() == Term::Kind::Chan)
        return names_equal(a.channel_name(), ta, b.channel_name(), tb);
      return true;
    }
  }
  return false;
}

template <typename T, typename Eq>
bool vectors_equal(const std::vector<T>& a, const std::vector<T>& b, Eq eq) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

}  // namespace

bool specs_equal(const CeremonySpec& a, const CeremonySpec& b) {
  const NameTable& ta = *a.names;
  const NameTable& tb = *b.names;
  auto name_eq = [&](Name x, Name y) { return names_equal(x, ta, y, tb); };
  auto term_eq = [&](const Term& x, const Term& y) { return terms_equal(x, ta, y, tb); };
  auto opt_name_eq = [&](const std::optional<Name>& x, const std::optional<Name>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || name_eq(*x, *y);
  };

  if (a.name != b.name) return false;
  if (!vectors_equal(a.identities, b.identities, name_eq)) return false;
  if (!vectors_equal(a.configs, b.configs, [&](const ConfigDecl& x, const ConfigDecl& y) {
        return name_eq(x.name, y.name) && opt_name_eq(x.parent, y.parent) &&
               opt_name_eq(x.controller, y.controller);
      }))
    return false;
  if (!vectors_equal(a.channels, b.channels, [&](const ChannelDecl& x, const ChannelDecl& y) {
        return name_eq(x.name, y.name) && x.kind == y.kind &&
               name_eq(x.endpoint, y.endpoint) && name_eq(x.peer, y.peer);
      }))
    return false;
  if (!vectors_equal(a.ctors, b.ctors, [](const CtorDecl& x, const CtorDecl& y) {
        return x.name == y.name && x.arity == y.arity;
      }))
    return false;
  if (!vectors_equal(a.rules, b.rules, [&](const RuleDecl& x, const RuleDecl& y) {
        return term_eq(x.lhs, y.lhs) && term_eq(x.rhs, y.rhs);
      }))
    return false;
  if (!vectors_equal(a.constants, b.constants,
                     [&](const ConstantDecl& x, const ConstantDecl& y) {
                       return name_eq(x.name, y.name) &&
                              vectors_equal(x.placement, y.placement, name_eq);
                     }))
    return false;
  if (!vectors_equal(a.events, b.events, [&](const EventDecl& x, const EventDecl& y) {
        if (x.id != y.id || x.kind != y.kind || !name_eq(x.config, y.config)) return false;
        if (x.channel.has_value() != y.channel.has_value()) return false;
        if (x.channel && !name_eq(*x.channel, *y.channel)) return false;
        switch (x.kind) {
          case EventKind::Output:
          case EventKind::Input:
            if (!term_eq(x.payload, y.payload)) return false;
            break;
          case EventKind::Fresh:
            if (!vectors_equal(x.binds, y.binds, name_eq)) return false;
            break;
          case EventKind::Compute:
            if (!vectors_equal(x.binds, y.binds, name_eq)) return false;
            if (!term_eq(x.compute_rhs, y.compute_rhs)) return false;
            break;
          case EventKind::Test:
            if (!term_eq(x.test_lhs, y.test_lhs) || !term_eq(x.test_rhs, y.test_rhs))
              return false;
            break;
        }
        return x.deps == y.deps;
      }))
    return false;
  return a.desired_run == b.desired_run;
}

}  // namespace anpsi
