#include <algorithm>
#include <map>

#include "anpsi/ceremony.hpp"

namespace anpsi {

namespace {

struct Compiler {
  const CeremonySpec& spec;
  NameTable& names;
  const BindingInfo& binds;
  std::map<Name, Term> channel_terms;  // declared channel -> canonical term
  std::vector<CompiledEventInfo> infos;

  Term channel_term(Name chan) {
    auto it = channel_terms.find(chan);
    if (it != channel_terms.end()) return it->second;
    const ChannelDecl* d = spec.find_channel(chan);
    Term t = Term::chan(spec.config_path(d->endpoint), chan);
    channel_terms.emplace(chan, t);
    return t;
  }

  Polarity event_polarity(const EventDecl& e) const {
    // Local events leave the record of their loc-channel input side.
    return e.kind == EventKind::Output ? Polarity::Output : Polarity::Input;
  }

  // Guard over the non-sender dependencies: event id exact, payload wild;
  // channel included when the dependency is a declared communication.
  Condition guard_for(const EventDecl& e) {
    std::vector<ActionPattern> pats;
    for (const EventId& dep : e.deps) {
      const EventDecl* d = spec.find_event(dep);
      if (e.kind == EventKind::Input && d->kind == EventKind::Output &&
          d->channel == e.channel)
        continue;  // the sender; realized by the communication itself
      ActionPattern p;
      p.event = dep;
      p.polarity = event_polarity(*d);
      if (d->kind == EventKind::Output || d->kind == EventKind::Input)
        p.channel = channel_term(*d->channel);
      pats.push_back(std::move(p));
    }
    if (pats.empty()) return Condition::truth();
    return Condition::done(std::move(pats));
  }

  Assertion trailing_for(const EventDecl& e, const ActionRecord& record) {
    Assertion a;
    a.done.insert(record);
    for (const EventId& dep : e.deps) a.depends.insert({dep, e.id});
    return a;
  }

  // Wraps body in Case(guard : body) unless the guard is trivial.
  static Process guarded(Condition guard, Process body) {
    if (guard.is_trivial()) return body;
    std::vector<Process::Branch> branches;
    branches.push_back({std::move(guard), std::move(body)});
    return Process::choice(std::move(branches));
  }

  // The paper's local-action shape: a private loc channel the configuration
  // talks to itself on; the input side carries the continuation and the
  // trailing assertion.
  Process local_action(const EventDecl& e, Term sent, std::vector<Name> vars, Term pattern,
                       Process rest, std::optional<Name> fresh_value) {
    Name loc = names.fresh(Sort::Chan, "loc");
    ConfigPath at = spec.config_path(e.config);
    Term loc_term = Term::chan(at, loc);
    infos.push_back(CompiledEventInfo{e.id, e.kind, Polarity::Input, loc_term});

    ActionRecord rec{e.id, Polarity::Input, loc_term, pattern};
    Process trailing = Process::assertion(trailing_for(e, rec));
    Process in_side = Process::input(loc_term, std::move(vars), pattern,
                                     Process::par(std::move(rest), std::move(trailing)));
    Process out_side = Process::output(loc_term, std::move(sent), Process::nil());
    if (fresh_value) out_side = Process::restrict(*fresh_value, std::move(out_side));
    return Process::restrict(loc, Process::par(std::move(out_side), std::move(in_side)));
  }

  Process compile_event(const EventDecl& e, Process rest) {
    switch (e.kind) {
      case EventKind::Output: {
        Term chan = channel_term(*e.channel);
        infos.push_back(CompiledEventInfo{e.id, e.kind, Polarity::Output, chan});
        ActionRecord rec{e.id, Polarity::Output, chan, e.payload};
        Process trailing = Process::assertion(trailing_for(e, rec));
        Process body = Process::output(
            chan, e.payload, Process::par(std::move(rest), std::move(trailing)));
        return guarded(guard_for(e), std::move(body));
      }
      case EventKind::Input: {
        Term chan = channel_term(*e.channel);
        infos.push_back(CompiledEventInfo{e.id, e.kind, Polarity::Input, chan});
        ActionRecord rec{e.id, Polarity::Input, chan, e.payload};
        Process trailing = Process::assertion(trailing_for(e, rec));
        std::vector<Name> vars;
        if (auto it = binds.pattern_binds.find(e.id); it != binds.pattern_binds.end())
          vars = it->second;
        Process body = Process::input(chan, std::move(vars), e.payload,
                                      Process::par(std::move(rest), std::move(trailing)));
        return guarded(guard_for(e), std::move(body));
      }
      case EventKind::Fresh: {
        Name var = e.binds.front();
        Name value = names.fresh(Sort::Msg, names.display(var));
        Process body = local_action(e, Term::leaf(value), {var}, Term::leaf(var),
                                    std::move(rest), value);
        return guarded(guard_for(e), std::move(body));
      }
      case EventKind::Compute: {
        Name var = e.binds.front();
        Process body = local_action(e, e.compute_rhs, {var}, Term::leaf(var),
                                    std::move(rest), std::nullopt);
        return guarded(guard_for(e), std::move(body));
      }
      case EventKind::Test: {
        Name var = names.fresh(Sort::Var, "chk");
        Term sent = Term::tuple({e.test_lhs, e.test_rhs});
        Process body =
            local_action(e, sent, {var}, Term::leaf(var), std::move(rest), std::nullopt);
        Condition cond = Condition::conj(
            {Condition::term_eq(e.test_lhs, e.test_rhs), guard_for(e)});
        return guarded(std::move(cond), std::move(body));
      }
    }
    return Process::nil();
  }

  Process run() {
    // One sequential chain per configuration, in declaration order.
    std::vector<Process> chains;
    for (const ConfigDecl& c : spec.configs) {
      std::vector<const EventDecl*> evs;
      for (const EventDecl& e : spec.events)
        if (e.config == c.name) evs.push_back(&e);
      if (evs.empty()) continue;
      Process chain = Process::nil();
      for (auto it = evs.rbegin(); it != evs.rend(); ++it)
        chain = compile_event(**it, std::move(chain));
      chains.push_back(std::move(chain));
    }

    Process whole = Process::nil();
    if (!chains.empty()) {
      whole = chains.back();
      for (size_t i = chains.size() - 1; i-- > 0;)
        whole = Process::par(chains[i], std::move(whole));
    }

    // Channels are the ceremony's own: restricting them closes the system, so
    // exploration sees only internal steps. Secrets are restricted outermost.
    for (auto it = spec.channels.rbegin(); it != spec.channels.rend(); ++it)
      whole = Process::restrict(it->name, std::move(whole));
    for (auto it = spec.constants.rbegin(); it != spec.constants.rend(); ++it)
      whole = Process::restrict(it->name, std::move(whole));
    return whole;
  }
};

}  // namespace

CompileOutput compile_with_info(const CeremonySpec& spec) {
  std::vector<Diagnostic> ds = validate(spec);
  if (has_errors(ds))
    throw std::invalid_argument("compile requires a spec that validates: " +
                                ds.front().message);
  BindingInfo binds = analyze_bindings(spec);
  Compiler c{spec, *spec.names, binds, {}, {}};
  Process p = c.run();
  // Record infos in event declaration order.
  std::vector<CompiledEventInfo> ordered;
  for (const EventDecl& e : spec.events)
    for (const CompiledEventInfo& i : c.infos)
      if (i.id == e.id) ordered.push_back(i);
  return CompileOutput{std::move(p), std::move(ordered)};
}

Process compile(const CeremonySpec& spec) { return compile_with_info(spec).process; }

}  // namespace anpsi
