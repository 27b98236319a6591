#include "anpsi/process.hpp"

#include <algorithm>
#include <sstream>

namespace anpsi {

struct Process::Node {
  Kind kind = Kind::Nil;
  Term channel;             // Output, Input
  Term payload;             // Output
  std::vector<Name> vars;   // Input pattern variables
  Term pattern;             // Input
  Process cont;             // Output, Input
  std::vector<Branch> branches;  // Case
  Name bound;               // Restrict
  Process sub;              // Restrict, Repl body
  Process lhs, rhs;         // Par
  Assertion psi;            // Assert
};

// A null node means Nil; Node members recursively default-construct Process,
// so Nil cannot itself allocate a node.
Process::Process() = default;

Process Process::nil() { return Process(); }

Process Process::output(Term channel, Term payload, Process cont) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Output;
  n->channel = std::move(channel);
  n->payload = std::move(payload);
  n->cont = std::move(cont);
  return Process(std::move(n));
}

Process Process::input(Term channel, std::vector<Name> vars, Term pattern, Process cont) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Input;
  n->channel = std::move(channel);
  n->vars = std::move(vars);
  n->pattern = std::move(pattern);
  n->cont = std::move(cont);
  return Process(std::move(n));
}

Process Process::choice(std::vector<Branch> branches) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Case;
  n->branches = std::move(branches);
  return Process(std::move(n));
}

Process Process::restrict(Name name, Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Restrict;
  n->bound = name;
  n->sub = std::move(body);
  return Process(std::move(n));
}

Process Process::par(Process left, Process right) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Par;
  n->lhs = std::move(left);
  n->rhs = std::move(right);
  return Process(std::move(n));
}

Process Process::repl(Process body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Repl;
  n->sub = std::move(body);
  return Process(std::move(n));
}

Process Process::assertion(Assertion psi) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Assert;
  n->psi = std::move(psi);
  return Process(std::move(n));
}

Process::Kind Process::kind() const { return node_ ? node_->kind : Kind::Nil; }
const Term& Process::channel() const { return node_->channel; }
const Term& Process::payload() const { return node_->payload; }
const std::vector<Name>& Process::pattern_vars() const { return node_->vars; }
const Term& Process::pattern() const { return node_->pattern; }
const Process& Process::continuation() const { return node_->cont; }
std::span<const Process::Branch> Process::branches() const { return node_->branches; }
Name Process::bound_name() const { return node_->bound; }
const Process& Process::body() const { return node_->sub; }
const Process& Process::left() const { return node_->lhs; }
const Process& Process::right() const { return node_->rhs; }
const Assertion& Process::psi() const { return node_->psi; }

bool operator==(const Process& a, const Process& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Process::Kind::Nil:
      return true;
    case Process::Kind::Output:
      return a.channel() == b.channel() && a.payload() == b.payload() &&
             a.continuation() == b.continuation();
    case Process::Kind::Input:
      return a.channel() == b.channel() && a.pattern_vars() == b.pattern_vars() &&
             a.pattern() == b.pattern() && a.continuation() == b.continuation();
    case Process::Kind::Case: {
      auto ab = a.branches(), bb = b.branches();
      if (ab.size() != bb.size()) return false;
      for (size_t i = 0; i < ab.size(); ++i)
        if (!(ab[i].guard == bb[i].guard && ab[i].proc == bb[i].proc)) return false;
      return true;
    }
    case Process::Kind::Restrict:
      return a.bound_name() == b.bound_name() && a.body() == b.body();
    case Process::Kind::Par:
      return a.left() == b.left() && a.right() == b.right();
    case Process::Kind::Repl:
      return a.body() == b.body();
    case Process::Kind::Assert:
      return a.psi() == b.psi();
  }
  return false;
}

Frame frame(const Process& p, const InstanceSignature& sig) {
  switch (p.kind()) {
    case Process::Kind::Assert:
      return Frame{{}, p.psi()};
    case Process::Kind::Par: {
      Frame l = frame(p.left(), sig);
      Frame r = frame(p.right(), sig);
      std::vector<Name> binders = std::move(l.binders);
      binders.insert(binders.end(), r.binders.begin(), r.binders.end());
      return Frame{std::move(binders), sig.compose(l.assertion, r.assertion)};
    }
    case Process::Kind::Restrict: {
      Frame f = frame(p.body(), sig);
      f.binders.insert(f.binders.begin(), p.bound_name());
      return f;
    }
    default:
      // Prefixes, case, replication and Nil expose nothing.
      return Frame{{}, sig.unit};
  }
}

NameSet free_names(const Assertion& a) {
  NameSet out;
  for (const ActionRecord& r : a.done) {
    collect_free_names(r.channel, out);
    collect_free_names(r.payload, out);
  }
  return out;
}

NameSet free_names(const Condition& c) {
  NameSet out;
  for (const auto& eq : c.equalities()) {
    collect_free_names(eq.lhs, out);
    collect_free_names(eq.rhs, out);
  }
  for (const ActionPattern& p : c.done_patterns()) {
    if (p.channel) collect_free_names(*p.channel, out);
    if (p.payload) collect_free_names(*p.payload, out);
  }
  return out;
}

namespace {

void collect_process_free(const Process& p, NameSet& out) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return;
    case Process::Kind::Output:
      collect_free_names(p.channel(), out);
      collect_free_names(p.payload(), out);
      collect_process_free(p.continuation(), out);
      return;
    case Process::Kind::Input: {
      collect_free_names(p.channel(), out);
      NameSet inner;
      collect_free_names(p.pattern(), inner);
      collect_process_free(p.continuation(), inner);
      for (Name v : p.pattern_vars()) inner.erase(v);
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Process::Kind::Case:
      for (const auto& br : p.branches()) {
        NameSet g = free_names(br.guard);
        out.insert(g.begin(), g.end());
        collect_process_free(br.proc, out);
      }
      return;
    case Process::Kind::Restrict: {
      NameSet inner;
      collect_process_free(p.body(), inner);
      inner.erase(p.bound_name());
      out.insert(inner.begin(), inner.end());
      return;
    }
    case Process::Kind::Par:
      collect_process_free(p.left(), out);
      collect_process_free(p.right(), out);
      return;
    case Process::Kind::Repl:
      collect_process_free(p.body(), out);
      return;
    case Process::Kind::Assert: {
      NameSet a = free_names(p.psi());
      out.insert(a.begin(), a.end());
      return;
    }
  }
}

// Name-for-name renaming applied everywhere, including configuration paths
// and binder positions. Used for alpha-copies and binder freshening.
using Renaming = std::map<Name, Name>;

Name rename_name(Name n, const Renaming& rho) {
  auto it = rho.find(n);
  return it == rho.end() ? n : it->second;
}

Term rename_term(const Term& t, const Renaming& rho) {
  if (rho.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::Leaf:
      return Term::leaf(rename_name(t.leaf_name(), rho));
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(rename_term(a, rho));
      return Term::app(t.ctor(), std::move(args));
    }
    case Term::Kind::Chan:
    case Term::Kind::Path: {
      ConfigPath p = t.config_path();
      if (p.controller) p.controller = rename_name(*p.controller, rho);
      for (Name& n : p.path) n = rename_name(n, rho);
      if (t.kind() == Term::Kind::Chan)
        return Term::chan(std::move(p), rename_name(t.channel_name(), rho));
      return Term::path(std::move(p));
    }
  }
  return t;
}

Assertion rename_assertion(const Assertion& a, const Renaming& rho) {
  Assertion out;
  out.depends = a.depends;
  for (const ActionRecord& r : a.done)
    out.done.insert(ActionRecord{r.event, r.polarity, rename_term(r.channel, rho),
                                 rename_term(r.payload, rho)});
  return out;
}

Condition rename_condition(const Condition& c, const Renaming& rho) {
  std::vector<Condition> parts;
  for (const auto& eq : c.equalities())
    parts.push_back(Condition::term_eq(rename_term(eq.lhs, rho), rename_term(eq.rhs, rho)));
  std::vector<ActionPattern> pats;
  for (ActionPattern p : c.done_patterns()) {
    if (p.channel) p.channel = rename_term(*p.channel, rho);
    if (p.payload) p.payload = rename_term(*p.payload, rho);
    pats.push_back(std::move(p));
  }
  if (!pats.empty()) parts.push_back(Condition::done(std::move(pats)));
  return Condition::conj(std::move(parts));
}

Process rename_process(const Process& p, const Renaming& rho) {
  if (rho.empty()) return p;
  switch (p.kind()) {
    case Process::Kind::Nil:
      return p;
    case Process::Kind::Output:
      return Process::output(rename_term(p.channel(), rho), rename_term(p.payload(), rho),
                             rename_process(p.continuation(), rho));
    case Process::Kind::Input: {
      std::vector<Name> vars;
      for (Name v : p.pattern_vars()) vars.push_back(rename_name(v, rho));
      return Process::input(rename_term(p.channel(), rho), std::move(vars),
                            rename_term(p.pattern(), rho),
                            rename_process(p.continuation(), rho));
    }
    case Process::Kind::Case: {
      std::vector<Process::Branch> branches;
      for (const auto& br : p.branches())
        branches.push_back({rename_condition(br.guard, rho), rename_process(br.proc, rho)});
      return Process::choice(std::move(branches));
    }
    case Process::Kind::Restrict:
      return Process::restrict(rename_name(p.bound_name(), rho),
                               rename_process(p.body(), rho));
    case Process::Kind::Par:
      return Process::par(rename_process(p.left(), rho), rename_process(p.right(), rho));
    case Process::Kind::Repl:
      return Process::repl(rename_process(p.body(), rho));
    case Process::Kind::Assert:
      return Process::assertion(rename_assertion(p.psi(), rho));
  }
  return p;
}

}  // namespace

NameSet free_names(const Process& p) {
  NameSet out;
  collect_process_free(p, out);
  return out;
}

Process substitute(const Process& p, const Substitution& s, NameTable& names) {
  if (s.empty()) return p;
  switch (p.kind()) {
    case Process::Kind::Nil:
      return p;
    case Process::Kind::Output:
      return Process::output(substitute(p.channel(), s), substitute(p.payload(), s),
                             substitute(p.continuation(), s, names));
    case Process::Kind::Input: {
      // Drop shadowed variables, then rename pattern variables that would
      // capture names free in the remaining range.
      std::map<Name, Term> kept;
      for (const auto& [n, t] : s.mapping()) {
        bool shadowed = false;
        for (Name v : p.pattern_vars()) shadowed = shadowed || v == n;
        if (!shadowed) kept.emplace(n, t);
      }
      Substitution inner{std::move(kept)};
      Term chan = substitute(p.channel(), s);
      if (inner.empty()) return Process::input(chan, p.pattern_vars(), p.pattern(), p.continuation());
      NameSet range = inner.range_names();
      Renaming rho;
      std::vector<Name> vars = p.pattern_vars();
      for (Name& v : vars)
        if (range.contains(v)) {
          Name fresh = names.fresh(v.sort, names.display(v));
          rho[v] = fresh;
          v = fresh;
        }
      Term pattern = p.pattern();
      Process cont = p.continuation();
      if (!rho.empty()) {
        pattern = rename_term(pattern, rho);
        cont = rename_process(cont, rho);
      }
      return Process::input(std::move(chan), std::move(vars), substitute(pattern, inner),
                            substitute(cont, inner, names));
    }
    case Process::Kind::Case: {
      std::vector<Process::Branch> branches;
      for (const auto& br : p.branches()) {
        std::vector<Condition> parts;
        for (const auto& eq : br.guard.equalities())
          parts.push_back(Condition::term_eq(substitute(eq.lhs, s), substitute(eq.rhs, s)));
        std::vector<ActionPattern> pats;
        for (ActionPattern ap : br.guard.done_patterns()) {
          if (ap.channel) ap.channel = substitute(*ap.channel, s);
          if (ap.payload) ap.payload = substitute(*ap.payload, s);
          pats.push_back(std::move(ap));
        }
        if (!pats.empty()) parts.push_back(Condition::done(std::move(pats)));
        branches.push_back({Condition::conj(std::move(parts)), substitute(br.proc, s, names)});
      }
      return Process::choice(std::move(branches));
    }
    case Process::Kind::Restrict: {
      Name bound = p.bound_name();
      Process body = p.body();
      if (s.range_names().contains(bound)) {
        Name fresh = names.fresh(bound.sort, names.display(bound));
        body = rename_process(body, Renaming{{bound, fresh}});
        bound = fresh;
      }
      return Process::restrict(bound, substitute(body, s, names));
    }
    case Process::Kind::Par:
      return Process::par(substitute(p.left(), s, names), substitute(p.right(), s, names));
    case Process::Kind::Repl:
      return Process::repl(substitute(p.body(), s, names));
    case Process::Kind::Assert: {
      Assertion out;
      out.depends = p.psi().depends;
      for (const ActionRecord& r : p.psi().done)
        out.done.insert(ActionRecord{r.event, r.polarity, substitute(r.channel, s),
                                     substitute(r.payload, s)});
      return Process::assertion(std::move(out));
    }
  }
  return p;
}

namespace {

Process freshen_rec(const Process& p, NameTable& names, Renaming rho) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return p;
    case Process::Kind::Output:
      return Process::output(rename_term(p.channel(), rho), rename_term(p.payload(), rho),
                             freshen_rec(p.continuation(), names, rho));
    case Process::Kind::Input: {
      Term chan = rename_term(p.channel(), rho);
      std::vector<Name> vars;
      for (Name v : p.pattern_vars()) {
        Name fresh = names.fresh(v.sort, names.display(v));
        rho[v] = fresh;
        vars.push_back(fresh);
      }
      return Process::input(std::move(chan), std::move(vars), rename_term(p.pattern(), rho),
                            freshen_rec(p.continuation(), names, rho));
    }
    case Process::Kind::Case: {
      std::vector<Process::Branch> branches;
      for (const auto& br : p.branches())
        branches.push_back(
            {rename_condition(br.guard, rho), freshen_rec(br.proc, names, rho)});
      return Process::choice(std::move(branches));
    }
    case Process::Kind::Restrict: {
      Name bound = p.bound_name();
      Name fresh = names.fresh(bound.sort, names.display(bound));
      rho[bound] = fresh;
      return Process::restrict(fresh, freshen_rec(p.body(), names, rho));
    }
    case Process::Kind::Par:
      return Process::par(freshen_rec(p.left(), names, rho),
                          freshen_rec(p.right(), names, rho));
    case Process::Kind::Repl:
      return Process::repl(freshen_rec(p.body(), names, rho));
    case Process::Kind::Assert:
      return Process::assertion(rename_assertion(p.psi(), rho));
  }
  return p;
}

}  // namespace

Process freshen_binders(const Process& p, NameTable& names) {
  return freshen_rec(p, names, {});
}

void check_well_formed(const Process& p) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      return;
    case Process::Kind::Output:
      check_well_formed(p.continuation());
      return;
    case Process::Kind::Input: {
      NameSet seen;
      for (Name v : p.pattern_vars()) {
        if (v.sort != Sort::Var)
          throw WellFormednessError("input pattern variable is not variable-sorted");
        if (!seen.insert(v).second)
          throw WellFormednessError("duplicate input pattern variable");
        if (!mentions(p.pattern(), v))
          throw WellFormednessError("pattern variable does not occur in pattern body");
      }
      check_well_formed(p.continuation());
      return;
    }
    case Process::Kind::Case:
      for (const auto& br : p.branches()) check_well_formed(br.proc);
      return;
    case Process::Kind::Restrict:
    case Process::Kind::Repl:
      check_well_formed(p.body());
      return;
    case Process::Kind::Par:
      check_well_formed(p.left());
      check_well_formed(p.right());
      return;
    case Process::Kind::Assert:
      return;
  }
}

namespace {

// Locally-nameless canonical printing. Bound names render as b<depth>, free
// names as f<id>; parallel children are optionally flattened and sorted.
struct CanonEnv {
  std::map<Name, int> bound;
  int depth = 0;
};

void canon_name(std::ostream& os, Name n, const CanonEnv& env) {
  auto it = env.bound.find(n);
  if (it != env.bound.end())
    os << 'b' << it->second;
  else
    os << 'f' << n.id;
}

void canon_term(std::ostream& os, const Term& t, const CanonEnv& env) {
  switch (t.kind()) {
    case Term::Kind::Leaf:
      canon_name(os, t.leaf_name(), env);
      return;
    case Term::Kind::App: {
      os << t.ctor() << '(';
      for (size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ',';
        canon_term(os, t.args()[i], env);
      }
      os << ')';
      return;
    }
    case Term::Kind::Chan:
    case Term::Kind::Path: {
      const ConfigPath& p = t.config_path();
      if (p.controller) canon_name(os, *p.controller, env);
      os << '[';
      for (size_t i = 0; i < p.path.size(); ++i) {
        if (i) os << ',';
        canon_name(os, p.path[i], env);
      }
      os << ']';
      if (t.kind() == Term::Kind::Chan) canon_name(os, t.channel_name(), env);
      return;
    }
  }
}

void canon_condition(std::ostream& os, const Condition& c, const CanonEnv& env) {
  os << "cond{";
  for (const auto& eq : c.equalities()) {
    os << "eq(";
    canon_term(os, eq.lhs, env);
    os << ',';
    canon_term(os, eq.rhs, env);
    os << ')';
  }
  for (const ActionPattern& p : c.done_patterns()) {
    os << "done(" << p.event << ',';
    if (p.polarity) os << (*p.polarity == Polarity::Input ? 'i' : 'o');
    os << ',';
    if (p.channel) canon_term(os, *p.channel, env);
    os << ',';
    if (p.payload) canon_term(os, *p.payload, env);
    os << ')';
  }
  os << '}';
}

void canon_assertion(std::ostream& os, const Assertion& a, const CanonEnv& env) {
  // Record order inside std::set may differ from canonical name order under
  // binders; re-sort by the canonical rendering.
  std::vector<std::string> rs;
  for (const ActionRecord& r : a.done) {
    std::ostringstream one;
    one << r.event << ',' << (r.polarity == Polarity::Input ? 'i' : 'o') << ',';
    canon_term(one, r.channel, env);
    one << ',';
    canon_term(one, r.payload, env);
    rs.push_back(one.str());
  }
  std::sort(rs.begin(), rs.end());
  os << "psi{";
  for (const auto& r : rs) os << '[' << r << ']';
  os << '|';
  for (const auto& [x, y] : a.depends) os << '(' << x << '<' << y << ')';
  os << '}';
}

void canon_process(std::ostream& os, const Process& p, CanonEnv env, bool normalize_par);

void flatten_par(const Process& p, std::vector<Process>& out) {
  if (p.kind() == Process::Kind::Par) {
    flatten_par(p.left(), out);
    flatten_par(p.right(), out);
  } else if (p.kind() != Process::Kind::Nil) {
    out.push_back(p);
  }
}

void canon_process(std::ostream& os, const Process& p, CanonEnv env, bool normalize_par) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      os << '0';
      return;
    case Process::Kind::Output:
      os << "out(";
      canon_term(os, p.channel(), env);
      os << ',';
      canon_term(os, p.payload(), env);
      os << ").";
      canon_process(os, p.continuation(), env, normalize_par);
      return;
    case Process::Kind::Input: {
      os << "in(";
      canon_term(os, p.channel(), env);
      os << ",\\" << p.pattern_vars().size() << '.';
      for (Name v : p.pattern_vars()) env.bound[v] = env.depth++;
      canon_term(os, p.pattern(), env);
      os << ").";
      canon_process(os, p.continuation(), env, normalize_par);
      return;
    }
    case Process::Kind::Case: {
      os << "case{";
      for (const auto& br : p.branches()) {
        canon_condition(os, br.guard, env);
        os << ':';
        canon_process(os, br.proc, env, normalize_par);
        os << ';';
      }
      os << '}';
      return;
    }
    case Process::Kind::Restrict: {
      os << "nu.";
      env.bound[p.bound_name()] = env.depth++;
      canon_process(os, p.body(), env, normalize_par);
      return;
    }
    case Process::Kind::Par: {
      if (!normalize_par) {
        os << "par(";
        canon_process(os, p.left(), env, normalize_par);
        os << ',';
        canon_process(os, p.right(), env, normalize_par);
        os << ')';
        return;
      }
      std::vector<Process> kids;
      flatten_par(p, kids);
      std::vector<std::string> keys;
      keys.reserve(kids.size());
      for (const Process& k : kids) {
        std::ostringstream one;
        canon_process(one, k, env, normalize_par);
        keys.push_back(one.str());
      }
      std::sort(keys.begin(), keys.end());
      if (keys.empty()) {
        os << '0';
      } else if (keys.size() == 1) {
        os << keys.front();
      } else {
        os << "par(";
        for (const auto& k : keys) os << k << ',';
        os << ')';
      }
      return;
    }
    case Process::Kind::Repl:
      os << '!';
      canon_process(os, p.body(), env, normalize_par);
      return;
    case Process::Kind::Assert:
      canon_assertion(os, p.psi(), env);
      return;
  }
}

}  // namespace

std::string canonical_key(const Process& p, bool normalize_par) {
  std::ostringstream os;
  canon_process(os, p, CanonEnv{}, normalize_par);
  return os.str();
}

bool alpha_equivalent(const Process& a, const Process& b) {
  return canonical_key(a) == canonical_key(b);
}

namespace {

void print_rec(std::ostream& os, const Process& p, const NameTable& names) {
  switch (p.kind()) {
    case Process::Kind::Nil:
      os << '0';
      return;
    case Process::Kind::Output:
      os << "out " << print_term(p.channel(), names) << '<'
         << print_term(p.payload(), names) << '>';
      if (p.continuation().kind() != Process::Kind::Nil) {
        os << " . ";
        print_rec(os, p.continuation(), names);
      }
      return;
    case Process::Kind::Input: {
      os << "in " << print_term(p.channel(), names) << " (\\";
      for (size_t i = 0; i < p.pattern_vars().size(); ++i) {
        if (i) os << ',';
        os << names.display(p.pattern_vars()[i]);
      }
      os << ')' << print_term(p.pattern(), names);
      if (p.continuation().kind() != Process::Kind::Nil) {
        os << " . ";
        print_rec(os, p.continuation(), names);
      }
      return;
    }
    case Process::Kind::Case: {
      os << "case ";
      bool first = true;
      for (const auto& br : p.branches()) {
        if (!first) os << " [] ";
        first = false;
        os << print_condition(br.guard, names) << " : ";
        print_rec(os, br.proc, names);
      }
      return;
    }
    case Process::Kind::Restrict:
      os << "nu " << names.display(p.bound_name()) << " . (";
      print_rec(os, p.body(), names);
      os << ')';
      return;
    case Process::Kind::Par:
      os << '(';
      print_rec(os, p.left(), names);
      os << " | ";
      print_rec(os, p.right(), names);
      os << ')';
      return;
    case Process::Kind::Repl:
      os << "!(";
      print_rec(os, p.body(), names);
      os << ')';
      return;
    case Process::Kind::Assert:
      os << "assert " << print_assertion(p.psi(), names);
      return;
  }
}

}  // namespace

std::string print_process(const Process& p, const NameTable& names) {
  std::ostringstream os;
  print_rec(os, p, names);
  return os.str();
}

std::string print_label(const Label& l, const NameDisplay& disp) {
  switch (l.kind) {
    case Label::Kind::Tau:
      return "tau";
    case Label::Kind::Out: {
      std::ostringstream os;
      os << "out " << print_term(l.channel, disp);
      if (!l.extruded.empty()) {
        os << " (nu ";
        for (size_t i = 0; i < l.extruded.size(); ++i) {
          if (i) os << ',';
          os << disp(l.extruded[i]);
        }
        os << ')';
      }
      os << ' ' << print_term(l.payload, disp);
      return os.str();
    }
    case Label::Kind::In: {
      std::ostringstream os;
      os << "in " << print_term(l.channel, disp) << ' ' << print_term(l.payload, disp);
      return os.str();
    }
  }
  return "?";
}

std::string print_label(const Label& l, const NameTable& names) {
  return print_label(l, NameDisplay([&names](Name n) { return names.display(n); }));
}

}  // namespace anpsi
