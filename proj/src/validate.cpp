#include <algorithm>
#include <map>

#include "anpsi/ceremony.hpp"

namespace anpsi {

namespace {

Diagnostic err(int line, const std::string& code, std::string msg) {
  return Diagnostic{Diagnostic::Severity::Error, line, 1, code, std::move(msg)};
}

Diagnostic warn(int line, const std::string& code, std::string msg) {
  return Diagnostic{Diagnostic::Severity::Warning, line, 1, code, std::move(msg)};
}

struct BindWalk {
  const CeremonySpec& spec;
  const NameTable& names;
  BindingInfo& info;
  std::map<Name, NameSet> bound;  // config -> bound variables

  bool constant_placed(Name constant, Name config) const {
    for (const ConstantDecl& c : spec.constants)
      if (c.name == constant)
        return std::find(c.placement.begin(), c.placement.end(), config) !=
               c.placement.end();
    return false;
  }

  // Checks every leaf of a non-binding term: variables must be bound at the
  // configuration, message names must be placed constants.
  void check_uses(const Term& t, const EventDecl& e) {
    switch (t.kind()) {
      case Term::Kind::Leaf: {
        Name n = t.leaf_name();
        if (n.sort == Sort::Var && !bound[e.config].contains(n))
          info.diagnostics.push_back(
              err(e.line, "E119",
                  "variable '" + names.display(n) + "' is not bound at configuration '" +
                      names.display(e.config) + "' before event '" + e.id + "'"));
        if (n.sort == Sort::Msg && !constant_placed(n, e.config))
          info.diagnostics.push_back(
              err(e.line, "E127",
                  "constant '" + names.display(n) + "' is not placed at configuration '" +
                      names.display(e.config) + "'"));
        return;
      }
      case Term::Kind::App:
        for (const Term& a : t.args()) check_uses(a, e);
        return;
      default:
        return;
    }
  }

  void collect_pattern_binds(const Term& t, const EventDecl& e, std::vector<Name>& out) {
    switch (t.kind()) {
      case Term::Kind::Leaf: {
        Name n = t.leaf_name();
        if (n.sort == Sort::Var && !bound[e.config].contains(n)) {
          if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
        } else {
          check_uses(t, e);
        }
        return;
      }
      case Term::Kind::App:
        for (const Term& a : t.args()) collect_pattern_binds(a, e, out);
        return;
      default:
        return;
    }
  }

  void bind(Name var, const EventDecl& e) {
    if (!bound[e.config].insert(var).second)
      info.diagnostics.push_back(err(
          e.line, "E123",
          "variable '" + names.display(var) + "' is already bound at configuration '" +
              names.display(e.config) + "'"));
  }

  void walk() {
    for (const EventDecl& e : spec.events) {
      switch (e.kind) {
        case EventKind::Output:
          if (e.payload.valid()) check_uses(e.payload, e);
          break;
        case EventKind::Input: {
          std::vector<Name> binds;
          if (e.payload.valid()) collect_pattern_binds(e.payload, e, binds);
          info.pattern_binds[e.id] = binds;
          for (Name v : binds) bound[e.config].insert(v);
          break;
        }
        case EventKind::Fresh:
          for (Name v : e.binds) bind(v, e);
          break;
        case EventKind::Compute:
          if (e.compute_rhs.valid()) check_uses(e.compute_rhs, e);
          for (Name v : e.binds) bind(v, e);
          break;
        case EventKind::Test:
          if (e.test_lhs.valid()) check_uses(e.test_lhs, e);
          if (e.test_rhs.valid()) check_uses(e.test_rhs, e);
          break;
      }
    }
  }
};

}  // namespace

BindingInfo analyze_bindings(const CeremonySpec& spec) {
  BindingInfo info;
  BindWalk walk{spec, *spec.names, info, {}};
  walk.walk();
  return info;
}

std::vector<Diagnostic> validate(const CeremonySpec& spec) {
  std::vector<Diagnostic> ds;
  const NameTable& names = *spec.names;

  // Identities.
  for (size_t i = 0; i < spec.identities.size(); ++i)
    for (size_t j = i + 1; j < spec.identities.size(); ++j)
      if (spec.identities[i] == spec.identities[j])
        ds.push_back(err(1, "E101",
                         "duplicate identity '" + names.display(spec.identities[i]) + "'"));

  // Configuration forest.
  for (size_t i = 0; i < spec.configs.size(); ++i)
    for (size_t j = i + 1; j < spec.configs.size(); ++j)
      if (spec.configs[i].name == spec.configs[j].name)
        ds.push_back(err(spec.configs[j].line, "E102",
                         "duplicate configuration '" +
                             names.display(spec.configs[j].name) + "'"));
  for (const ConfigDecl& c : spec.configs) {
    if (c.parent && !spec.find_config(*c.parent))
      ds.push_back(err(c.line, "E103",
                       "unknown parent configuration '" + names.display(*c.parent) + "'"));
    if (c.controller) {
      bool known = false;
      for (Name i : spec.identities) known = known || i == *c.controller;
      if (!known)
        ds.push_back(err(c.line, "E105",
                         "unknown controlling identity '" + names.display(*c.controller) +
                             "'"));
    }
  }
  for (const ConfigDecl& c : spec.configs) {
    // Follow parents; a walk longer than the config count is a cycle.
    std::optional<Name> cur = c.name;
    size_t steps = 0;
    while (cur && steps <= spec.configs.size()) {
      const ConfigDecl* d = spec.find_config(*cur);
      cur = d ? d->parent : std::nullopt;
      ++steps;
    }
    if (cur)
      ds.push_back(err(c.line, "E104",
                       "containment cycle through configuration '" +
                           names.display(c.name) + "'"));
  }

  // Channels.
  for (size_t i = 0; i < spec.channels.size(); ++i)
    for (size_t j = i + 1; j < spec.channels.size(); ++j)
      if (spec.channels[i].name == spec.channels[j].name)
        ds.push_back(err(spec.channels[j].line, "E106",
                         "duplicate channel '" + names.display(spec.channels[j].name) +
                             "'"));
  for (const ChannelDecl& c : spec.channels) {
    if (!spec.find_config(c.endpoint))
      ds.push_back(err(c.line, "E107",
                       "unknown endpoint configuration '" + names.display(c.endpoint) +
                           "'"));
    if (!spec.find_config(c.peer))
      ds.push_back(
          err(c.line, "E107", "unknown peer configuration '" + names.display(c.peer) + "'"));
    if (c.endpoint == c.peer)
      ds.push_back(warn(c.line, "W129",
                        "channel '" + names.display(c.name) +
                            "' loops back to its own configuration"));
    if (c.kind == "loc" && spec.find_config(c.endpoint) && spec.find_config(c.peer)) {
      // Sharing channels must stay inside one compound configuration:
      // siblings or parent/child.
      const ConfigDecl* e = spec.find_config(c.endpoint);
      const ConfigDecl* p = spec.find_config(c.peer);
      bool related = (e->parent && p->parent && *e->parent == *p->parent) ||
                     (e->parent && *e->parent == c.peer) ||
                     (p->parent && *p->parent == c.endpoint) || c.endpoint == c.peer;
      if (!related)
        ds.push_back(warn(c.line, "W108",
                          "loc channel '" + names.display(c.name) +
                              "' connects unrelated configurations"));
    }
  }

  // Signature.
  for (size_t i = 0; i < spec.ctors.size(); ++i)
    for (size_t j = i + 1; j < spec.ctors.size(); ++j)
      if (spec.ctors[i].name == spec.ctors[j].name)
        ds.push_back(err(spec.ctors[j].line, "E109",
                         "duplicate constructor '" + spec.ctors[j].name + "'"));
  for (const RuleDecl& r : spec.rules) {
    for (Name v : free_names(r.rhs))
      if (v.sort == Sort::Var && !r.variables.contains(v))
        ds.push_back(err(r.line, "E111",
                         "rule right-hand side variable '" + names.display(v) +
                             "' does not occur on the left"));
  }

  // Constants.
  for (size_t i = 0; i < spec.constants.size(); ++i)
    for (size_t j = i + 1; j < spec.constants.size(); ++j)
      if (spec.constants[i].name == spec.constants[j].name)
        ds.push_back(err(spec.constants[j].line, "E112",
                         "duplicate constant '" +
                             names.display(spec.constants[j].name) + "'"));
  for (const ConstantDecl& c : spec.constants)
    for (Name p : c.placement)
      if (!spec.find_config(p))
        ds.push_back(err(c.line, "E113",
                         "unknown placement configuration '" + names.display(p) + "'"));

  // Events.
  for (size_t i = 0; i < spec.events.size(); ++i)
    for (size_t j = i + 1; j < spec.events.size(); ++j)
      if (spec.events[i].id == spec.events[j].id)
        ds.push_back(
            err(spec.events[j].line, "E114", "duplicate event id '" + spec.events[j].id + "'"));

  std::map<Name, int> channel_outputs, channel_inputs;
  for (const EventDecl& e : spec.events) {
    if (!spec.find_config(e.config))
      ds.push_back(err(e.line, "E107",
                       "unknown configuration '" + names.display(e.config) + "' in event '" +
                           e.id + "'"));
    for (const EventId& d : e.deps)
      if (!spec.find_event(d))
        ds.push_back(
            err(e.line, "E117", "unknown dependency '" + d + "' in event '" + e.id + "'"));

    if (e.kind == EventKind::Output || e.kind == EventKind::Input) {
      if (!e.channel || !spec.find_channel(*e.channel)) {
        ds.push_back(err(e.line, "E115",
                         "unknown channel in event '" + e.id + "'"));
        continue;
      }
      const ChannelDecl* ch = spec.find_channel(*e.channel);
      if (ch->endpoint != e.config && ch->peer != e.config)
        ds.push_back(err(e.line, "E116",
                         "channel '" + names.display(ch->name) +
                             "' is not attached to configuration '" +
                             names.display(e.config) + "'"));
      (e.kind == EventKind::Output ? channel_outputs : channel_inputs)[*e.channel]++;
    }
  }
  for (const auto& [chan, count] : channel_outputs)
    if (count > 1)
      ds.push_back(err(spec.find_channel(chan)->line, "E122",
                       "channel '" + names.display(chan) +
                           "' carries more than one output event"));
  for (const auto& [chan, count] : channel_inputs)
    if (count > 1)
      ds.push_back(err(spec.find_channel(chan)->line, "E122",
                       "channel '" + names.display(chan) +
                           "' carries more than one input event"));

  // Input pairing: exactly one dependency must be the sender (the output
  // event on the same channel); the communication rule realizes it.
  for (const EventDecl& e : spec.events) {
    if (e.kind != EventKind::Input || !e.channel) continue;
    int senders = 0;
    for (const EventId& d : e.deps) {
      const EventDecl* de = spec.find_event(d);
      if (de && de->kind == EventKind::Output && de->channel == e.channel) ++senders;
    }
    if (senders != 1)
      ds.push_back(err(e.line, "E121",
                       "input event '" + e.id +
                           "' must list exactly one dependency that outputs on its channel"));
  }

  // Dependency graph acyclicity (shared closure helper throws on cycles).
  {
    std::set<DependPair> pairs;
    for (const EventDecl& e : spec.events)
      for (const EventId& d : e.deps)
        if (spec.find_event(d)) pairs.insert({d, e.id});
    try {
      close_depends(pairs);
    } catch (const CycleError& ce) {
      ds.push_back(err(spec.events.empty() ? 1 : spec.events.front().line, "E118",
                       std::string("event dependency cycle: ") + ce.what()));
    }
  }

  // Desired run.
  {
    std::set<DependPair> pairs;
    for (const DependPair& p : spec.desired_run) {
      if (!spec.find_event(p.first))
        ds.push_back(err(1, "E125", "desired run mentions unknown event '" + p.first + "'"));
      if (!spec.find_event(p.second))
        ds.push_back(err(1, "E125", "desired run mentions unknown event '" + p.second + "'"));
      pairs.insert(p);
    }
    try {
      close_depends(pairs);
    } catch (const CycleError& ce) {
      ds.push_back(err(1, "E126", std::string("desired run is not a partial order: ") +
                                      ce.what()));
    }
  }

  // Binding discipline.
  BindingInfo binds = analyze_bindings(spec);
  for (Diagnostic& d : binds.diagnostics) ds.push_back(std::move(d));

  return ds;
}

}  // namespace anpsi
