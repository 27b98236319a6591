#ifndef ANPSI_TESTS_PI_ORACLE_HPP
#define ANPSI_TESTS_PI_ORACLE_HPP

// Independent small-step pi-calculus reducer. Derives transitions directly on
// the PiProc syntax (no frames, entailment, offers or psi substitution), so it
// can serve as an oracle for encode_pi + transitions(). Label data types are
// shared with the engine only for uniform canonical printing.
//
// Input convention mirrors the engine's: a free input fires once with a fresh
// opaque witness that is restricted in the continuation.

#include <set>
#include <string>
#include <vector>

#include "anpsi/explore.hpp"
#include "anpsi/pi.hpp"

namespace anpsi::pi_oracle {

inline PiProc rename(const PiProc& p, Name from, Name to) {
  auto r = [&](Name n) { return n == from ? to : n; };
  switch (p.kind()) {
    case PiProc::Kind::Nil:
      return p;
    case PiProc::Kind::Out:
      return PiProc::out(r(p.chan()), r(p.obj()), rename(p.body(), from, to));
    case PiProc::Kind::In:
      if (p.var() == from) return p;  // shadowed
      return PiProc::in(r(p.chan()), p.var(), rename(p.body(), from, to));
    case PiProc::Kind::Sum:
      return PiProc::sum(rename(p.left(), from, to), rename(p.right(), from, to));
    case PiProc::Kind::Par:
      return PiProc::par(rename(p.left(), from, to), rename(p.right(), from, to));
    case PiProc::Kind::Nu:
      if (p.bound() == from) return p;
      return PiProc::nu(p.bound(), rename(p.body(), from, to));
    case PiProc::Kind::Rep:
      return PiProc::rep(rename(p.body(), from, to));
  }
  return p;
}

struct PiStep {
  Label label;
  PiProc next;
};

inline std::vector<PiStep> pi_steps(const PiProc& p, NameTable& names) {
  std::vector<PiStep> out;
  switch (p.kind()) {
    case PiProc::Kind::Nil:
      return out;
    case PiProc::Kind::Out: {
      Label l;
      l.kind = Label::Kind::Out;
      l.channel = Term::leaf(p.chan());
      l.payload = Term::leaf(p.obj());
      out.push_back(PiStep{std::move(l), p.body()});
      return out;
    }
    case PiProc::Kind::In: {
      Name w = names.fresh(Sort::Msg, names.display(p.var()));
      Label l;
      l.kind = Label::Kind::In;
      l.channel = Term::leaf(p.chan());
      l.payload = Term::leaf(w);
      out.push_back(PiStep{std::move(l), PiProc::nu(w, rename(p.body(), p.var(), w))});
      return out;
    }
    case PiProc::Kind::Sum: {
      for (PiStep& s : pi_steps(p.left(), names)) out.push_back(std::move(s));
      for (PiStep& s : pi_steps(p.right(), names)) out.push_back(std::move(s));
      return out;
    }
    case PiProc::Kind::Par: {
      std::vector<PiStep> ls = pi_steps(p.left(), names);
      std::vector<PiStep> rs = pi_steps(p.right(), names);
      for (const PiStep& s : ls) out.push_back(PiStep{s.label, PiProc::par(s.next, p.right())});
      for (const PiStep& s : rs) out.push_back(PiStep{s.label, PiProc::par(p.left(), s.next)});
      // com: an output half meets an input half on the same channel name; the
      // input's witness is renamed to the sent object.
      auto coms = [&](const std::vector<PiStep>& outs, const std::vector<PiStep>& ins,
                      bool out_left) {
        for (const PiStep& o : outs) {
          if (o.label.kind != Label::Kind::Out) continue;
          for (const PiStep& i : ins) {
            if (i.label.kind != Label::Kind::In) continue;
            if (!(o.label.channel == i.label.channel)) continue;
            Name witness = i.label.payload.leaf_name();
            Name obj = o.label.payload.leaf_name();
            // strip the witness restriction, then substitute
            PiProc body = i.next.kind() == PiProc::Kind::Nu && i.next.bound() == witness
                              ? i.next.body()
                              : i.next;
            PiProc received = rename(body, witness, obj);
            PiProc joined = out_left ? PiProc::par(o.next, received)
                                     : PiProc::par(received, o.next);
            for (auto it = o.label.extruded.rbegin(); it != o.label.extruded.rend(); ++it)
              joined = PiProc::nu(*it, joined);
            out.push_back(PiStep{Label::tau(), std::move(joined)});
          }
        }
      };
      coms(ls, rs, true);
      coms(rs, ls, false);
      return out;
    }
    case PiProc::Kind::Nu: {
      Name a = p.bound();
      for (PiStep& s : pi_steps(p.body(), names)) {
        switch (s.label.kind) {
          case Label::Kind::Tau:
            out.push_back(PiStep{s.label, PiProc::nu(a, s.next)});
            break;
          case Label::Kind::Out:
            if (s.label.channel.leaf_name() == a) break;
            if (mentions(s.label.payload, a)) {
              s.label.extruded.insert(s.label.extruded.begin(), a);
              out.push_back(std::move(s));
            } else {
              out.push_back(PiStep{s.label, PiProc::nu(a, s.next)});
            }
            break;
          case Label::Kind::In:
            if (s.label.channel.leaf_name() == a) break;
            out.push_back(PiStep{s.label, PiProc::nu(a, s.next)});
            break;
        }
      }
      return out;
    }
    case PiProc::Kind::Rep:
      throw std::logic_error("pi oracle does not handle replication");
  }
  return out;
}

// All label sequences of length <= depth, each canonically rendered.
inline void pi_language_rec(const PiProc& p, int depth, NameTable& names,
                            std::vector<Label>& prefix, std::set<std::string>& out) {
  CanonNamer namer(names);
  NameDisplay disp = NameDisplay(std::ref(namer));
  std::string rendered;
  for (const Label& l : prefix) rendered += print_label(l, disp) + "; ";
  out.insert(rendered);
  if (depth == 0) return;
  for (const PiStep& s : pi_steps(p, names)) {
    prefix.push_back(s.label);
    pi_language_rec(s.next, depth - 1, names, prefix, out);
    prefix.pop_back();
  }
}

inline std::set<std::string> pi_language(const PiProc& p, int depth, NameTable& names) {
  std::set<std::string> out;
  std::vector<Label> prefix;
  pi_language_rec(p, depth, names, prefix, out);
  return out;
}

// Same language, derived through the engine: encode_pi + transitions().
inline void psi_language_rec(const Process& p, const InstanceSignature& sig, int depth,
                             NameTable& names, std::vector<Label>& prefix,
                             std::set<std::string>& out) {
  CanonNamer namer(names);
  NameDisplay disp = NameDisplay(std::ref(namer));
  std::string rendered;
  for (const Label& l : prefix) rendered += print_label(l, disp) + "; ";
  out.insert(rendered);
  if (depth == 0) return;
  for (const Transition& t : transitions(sig.unit, p, sig, 2, names)) {
    prefix.push_back(t.label);
    psi_language_rec(t.target, sig, depth - 1, names, prefix, out);
    prefix.pop_back();
  }
}

inline std::set<std::string> psi_language(const PiProc& p, int depth, NameTable& names,
                                          Name top) {
  NameSet fns;
  // universe: free names of the process plus two reserved fresh names
  std::vector<Name> universe;
  Process encoded = encode_pi(p, top);
  for (Name n : free_names(encoded)) universe.push_back(n);
  universe.push_back(top);
  InstanceSignature sig = make_pi_instance(universe);
  std::set<std::string> out;
  std::vector<Label> prefix;
  psi_language_rec(encoded, sig, depth, names, prefix, out);
  return out;
}

}  // namespace anpsi::pi_oracle

#endif
