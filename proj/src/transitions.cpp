#include "anpsi/transitions.hpp"

#include <functional>

namespace anpsi {

std::optional<Substitution> match_pattern(const std::vector<Name>& vars,
                                          const Term& pattern, const Term& value) {
  NameSet vs;
  for (Name v : vars) {
    if (v.sort != Sort::Var)
      throw WellFormednessError("pattern variable is not variable-sorted");
    if (!vs.insert(v).second) throw WellFormednessError("duplicate pattern variable");
    if (!mentions(pattern, v))
      throw WellFormednessError("pattern variable does not occur in pattern body");
  }
  return match_term(vs, pattern, value);
}

namespace {

using Rebuild = std::function<Process(Process)>;

struct OutputOffer {
  Term channel;
  std::vector<Name> extruded;
  Term payload;
  Process cont;
  Rebuild rebuild;
};

struct InputOffer {
  Term channel;
  std::vector<Name> vars;
  Term pattern;
  Process cont;
  Rebuild rebuild;
};

Process wrap_restrictions(const std::vector<Name>& binders, Process p) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    p = Process::restrict(*it, std::move(p));
  return p;
}

bool label_channel_mentions(const Term& channel, Name n) { return mentions(channel, n); }

struct Engine {
  const InstanceSignature& sig;
  NameTable& names;

  void collect_output_offers(const Assertion& ctx, const Process& p, int budget,
                             const Rebuild& rebuild, std::vector<OutputOffer>& out) {
    switch (p.kind()) {
      case Process::Kind::Output:
        out.push_back(OutputOffer{p.channel(), {}, p.payload(), p.continuation(), rebuild});
        return;
      case Process::Kind::Case:
        for (const auto& br : p.branches())
          if (sig.entails(ctx, br.guard))
            collect_output_offers(ctx, br.proc, budget, rebuild, out);
        return;
      case Process::Kind::Restrict: {
        Name a = p.bound_name();
        std::vector<OutputOffer> inner;
        collect_output_offers(ctx, p.body(), budget, rebuild, inner);
        for (OutputOffer& o : inner) {
          if (label_channel_mentions(o.channel, a)) continue;
          if (mentions(o.payload, a)) {
            // Scope opening: the binder migrates to the communication site.
            o.extruded.insert(o.extruded.begin(), a);
            out.push_back(std::move(o));
          } else {
            Rebuild prev = o.rebuild;
            o.rebuild = [a, prev](Process r) { return Process::restrict(a, prev(std::move(r))); };
            out.push_back(std::move(o));
          }
        }
        return;
      }
      case Process::Kind::Par: {
        Assertion psi_l = frame(p.left(), sig).assertion;
        Assertion psi_r = frame(p.right(), sig).assertion;
        Process right = p.right(), left = p.left();
        Rebuild wrap_l = [right, rebuild](Process r) {
          return rebuild(Process::par(std::move(r), right));
        };
        Rebuild wrap_r = [left, rebuild](Process r) {
          return rebuild(Process::par(left, std::move(r)));
        };
        collect_output_offers(sig.compose(ctx, psi_r), p.left(), budget, wrap_l, out);
        collect_output_offers(sig.compose(ctx, psi_l), p.right(), budget, wrap_r, out);
        return;
      }
      case Process::Kind::Repl: {
        if (budget <= 0) return;
        Process unfolded = Process::par(freshen_binders(p.body(), names), p);
        collect_output_offers(ctx, unfolded, budget - 1, rebuild, out);
        return;
      }
      default:
        return;
    }
  }

  void collect_input_offers(const Assertion& ctx, const Process& p, int budget,
                            const Rebuild& rebuild, std::vector<InputOffer>& out) {
    switch (p.kind()) {
      case Process::Kind::Input:
        out.push_back(
            InputOffer{p.channel(), p.pattern_vars(), p.pattern(), p.continuation(), rebuild});
        return;
      case Process::Kind::Case:
        for (const auto& br : p.branches())
          if (sig.entails(ctx, br.guard))
            collect_input_offers(ctx, br.proc, budget, rebuild, out);
        return;
      case Process::Kind::Restrict: {
        Name a = p.bound_name();
        std::vector<InputOffer> inner;
        collect_input_offers(ctx, p.body(), budget, rebuild, inner);
        for (InputOffer& o : inner) {
          // A restricted name may not escape through the channel or be
          // required by the pattern: outside payloads cannot mention it.
          if (label_channel_mentions(o.channel, a) || mentions(o.pattern, a)) continue;
          Rebuild prev = o.rebuild;
          o.rebuild = [a, prev](Process r) { return Process::restrict(a, prev(std::move(r))); };
          out.push_back(std::move(o));
        }
        return;
      }
      case Process::Kind::Par: {
        Assertion psi_l = frame(p.left(), sig).assertion;
        Assertion psi_r = frame(p.right(), sig).assertion;
        Process right = p.right(), left = p.left();
        Rebuild wrap_l = [right, rebuild](Process r) {
          return rebuild(Process::par(std::move(r), right));
        };
        Rebuild wrap_r = [left, rebuild](Process r) {
          return rebuild(Process::par(left, std::move(r)));
        };
        collect_input_offers(sig.compose(ctx, psi_r), p.left(), budget, wrap_l, out);
        collect_input_offers(sig.compose(ctx, psi_l), p.right(), budget, wrap_r, out);
        return;
      }
      case Process::Kind::Repl: {
        if (budget <= 0) return;
        Process unfolded = Process::par(freshen_binders(p.body(), names), p);
        collect_input_offers(ctx, unfolded, budget - 1, rebuild, out);
        return;
      }
      default:
        return;
    }
  }

  // Pairs one output offer with one input offer under the (com) rule.
  void try_com(const Assertion& ctx, const Assertion& psi_out_side,
               const Assertion& psi_in_side, const OutputOffer& o, const InputOffer& i,
               bool out_on_left, std::vector<Transition>& out) {
    Assertion joint = sig.compose(sig.compose(psi_out_side, psi_in_side), ctx);
    if (!sig.entails(joint, sig.channel_eq(o.channel, i.channel))) return;
    auto s = match_pattern(i.vars, i.pattern, o.payload);
    if (!s) return;
    Process receiver = i.rebuild(substitute(i.cont, *s, names));
    Process sender = o.rebuild(o.cont);
    Process inner = out_on_left ? Process::par(std::move(sender), std::move(receiver))
                                : Process::par(std::move(receiver), std::move(sender));
    Process target = wrap_restrictions(o.extruded, std::move(inner));
    out.push_back(Transition{Label::tau(), std::move(target)});
  }

  std::vector<Transition> derive(const Assertion& ctx, const Process& p, int budget) {
    std::vector<Transition> out;
    switch (p.kind()) {
      case Process::Kind::Nil:
      case Process::Kind::Assert:
        // No transition rule for assertions; they only shape frames.
        return out;
      case Process::Kind::Output: {
        Label l;
        l.kind = Label::Kind::Out;
        l.channel = p.channel();
        l.payload = p.payload();
        out.push_back(Transition{std::move(l), p.continuation()});
        return out;
      }
      case Process::Kind::Input: {
        // Symbolic free input: fresh witnesses, restricted in the target.
        std::map<Name, Term> m;
        std::vector<Name> witnesses;
        for (Name v : p.pattern_vars()) {
          Name w = names.fresh(Sort::Msg, names.display(v));
          witnesses.push_back(w);
          m.emplace(v, Term::leaf(w));
        }
        Substitution s{std::move(m)};
        Label l;
        l.kind = Label::Kind::In;
        l.channel = p.channel();
        l.payload = substitute(p.pattern(), s);
        Process target = wrap_restrictions(witnesses, substitute(p.continuation(), s, names));
        out.push_back(Transition{std::move(l), std::move(target)});
        return out;
      }
      case Process::Kind::Case: {
        for (const auto& br : p.branches()) {
          if (!sig.entails(ctx, br.guard)) continue;
          for (Transition& t : derive(ctx, br.proc, budget)) out.push_back(std::move(t));
        }
        return out;
      }
      case Process::Kind::Restrict: {
        Name a = p.bound_name();
        for (Transition& t : derive(ctx, p.body(), budget)) {
          switch (t.label.kind) {
            case Label::Kind::Tau:
              out.push_back(Transition{t.label, Process::restrict(a, t.target)});
              break;
            case Label::Kind::Out:
              if (label_channel_mentions(t.label.channel, a)) break;
              if (mentions(t.label.payload, a)) {
                t.label.extruded.insert(t.label.extruded.begin(), a);
                out.push_back(std::move(t));  // scope opens; binder dropped
              } else {
                out.push_back(Transition{t.label, Process::restrict(a, t.target)});
              }
              break;
            case Label::Kind::In:
              if (label_channel_mentions(t.label.channel, a) || mentions(t.label.payload, a))
                break;
              out.push_back(Transition{t.label, Process::restrict(a, t.target)});
              break;
          }
        }
        return out;
      }
      case Process::Kind::Par: {
        const Process& l = p.left();
        const Process& r = p.right();
        Assertion psi_l = frame(l, sig).assertion;
        Assertion psi_r = frame(r, sig).assertion;
        Assertion ctx_l = sig.compose(ctx, psi_r);
        Assertion ctx_r = sig.compose(ctx, psi_l);
        for (Transition& t : derive(ctx_l, l, budget))
          out.push_back(Transition{std::move(t.label), Process::par(std::move(t.target), r)});
        for (Transition& t : derive(ctx_r, r, budget))
          out.push_back(Transition{std::move(t.label), Process::par(l, std::move(t.target))});

        std::vector<OutputOffer> louts, routs;
        std::vector<InputOffer> lins, rins;
        Rebuild id = [](Process q) { return q; };
        collect_output_offers(ctx_l, l, budget, id, louts);
        collect_input_offers(ctx_r, r, budget, id, rins);
        collect_output_offers(ctx_r, r, budget, id, routs);
        collect_input_offers(ctx_l, l, budget, id, lins);
        for (const OutputOffer& o : louts)
          for (const InputOffer& i : rins) try_com(ctx, psi_l, psi_r, o, i, true, out);
        for (const OutputOffer& o : routs)
          for (const InputOffer& i : lins) try_com(ctx, psi_r, psi_l, o, i, false, out);
        return out;
      }
      case Process::Kind::Repl: {
        if (budget <= 0) return out;
        Process unfolded = Process::par(freshen_binders(p.body(), names), p);
        return derive(ctx, unfolded, budget - 1);
      }
    }
    return out;
  }
};

}  // namespace

std::vector<Transition> transitions(const Assertion& context, const Process& p,
                                    const InstanceSignature& sig, int unfold_budget,
                                    NameTable& names) {
  check_well_formed(p);
  Engine e{sig, names};
  return e.derive(context, p, unfold_budget);
}

}  // namespace anpsi
