#include "anpsi/assertion.hpp"

#include <sstream>

namespace anpsi {

std::string_view polarity_name(Polarity p) {
  return p == Polarity::Input ? "in" : "out";
}

void close_depends(std::set<DependPair>& pairs) {
  // Warshall-style closure over the small event universe.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<DependPair> fresh;
    for (const auto& [a, b] : pairs)
      for (const auto& [c, d] : pairs)
        if (b == c && !pairs.contains({a, d})) fresh.emplace_back(a, d);
    for (auto& p : fresh) changed |= pairs.insert(std::move(p)).second;
  }
  for (const auto& [a, b] : pairs)
    if (a == b) throw CycleError("dependency cycle through event '" + a + "'");
}

Assertion compose_assertions(const Assertion& a, const Assertion& b) {
  if (b.empty()) return a;
  if (a.empty()) return b;
  Assertion out;
  out.done = a.done;
  out.done.insert(b.done.begin(), b.done.end());
  out.depends = a.depends;
  out.depends.insert(b.depends.begin(), b.depends.end());
  close_depends(out.depends);
  return out;
}

Condition Condition::term_eq(Term lhs, Term rhs) {
  Condition c;
  c.eqs_.push_back(TermEq{std::move(lhs), std::move(rhs)});
  return c;
}

Condition Condition::done(std::vector<ActionPattern> patterns) {
  Condition c;
  c.pats_ = std::move(patterns);
  return c;
}

Condition Condition::conj(std::vector<Condition> parts) {
  Condition c;
  for (Condition& p : parts) {
    for (auto& e : p.eqs_) c.eqs_.push_back(std::move(e));
    for (auto& d : p.pats_) c.pats_.push_back(std::move(d));
  }
  return c;
}

std::string print_record(const ActionRecord& r, const NameDisplay& disp) {
  std::ostringstream os;
  if (r.polarity == Polarity::Output)
    os << '<' << print_term(r.channel, disp) << '>';
  else
    os << '(' << print_term(r.channel, disp) << ')';
  os << ' ' << print_term(r.payload, disp) << " @" << r.event;
  return os.str();
}

std::string print_record(const ActionRecord& r, const NameTable& names) {
  return print_record(r, NameDisplay([&names](Name n) { return names.display(n); }));
}

std::string print_assertion(const Assertion& a, const NameTable& names) {
  std::ostringstream os;
  os << "{done={";
  bool first = true;
  for (const ActionRecord& r : a.done) {
    if (!first) os << "; ";
    first = false;
    os << print_record(r, names);
  }
  os << "}, deps={";
  first = true;
  for (const auto& [x, y] : a.depends) {
    if (!first) os << "; ";
    first = false;
    os << x << " < " << y;
  }
  os << "}}";
  return os.str();
}

std::string print_condition(const Condition& c, const NameTable& names) {
  if (c.is_trivial()) return "true";
  std::ostringstream os;
  bool first = true;
  for (const auto& eq : c.equalities()) {
    if (!first) os << " and ";
    first = false;
    os << print_term(eq.lhs, names) << " = " << print_term(eq.rhs, names);
  }
  for (const auto& p : c.done_patterns()) {
    if (!first) os << " and ";
    first = false;
    os << "done(" << p.event;
    if (p.polarity) os << ", " << polarity_name(*p.polarity);
    if (p.channel) os << ", " << print_term(*p.channel, names);
    if (p.payload) os << ", " << print_term(*p.payload, names);
    os << ')';
  }
  return os.str();
}

}  // namespace anpsi
