#include "anpsi/rewrite.hpp"

namespace anpsi {

namespace {

// Rewrites t at the root if some rule matches. Returns an invalid Term when
// no rule applies.
Term root_step(const Term& t, const RewriteSystem& rs) {
  for (const RewriteRule& r : rs.rules) {
    if (auto s = match_term(r.variables, r.lhs, t)) return substitute(r.rhs, *s);
  }
  return Term();
}

Term normalize_rec(const Term& t, const RewriteSystem& rs, int& budget) {
  if (budget-- <= 0) throw RewriteDivergence("rewrite step cap exceeded");
  Term current = t;
  if (current.kind() == Term::Kind::App) {
    std::vector<Term> args;
    args.reserve(current.args().size());
    for (const Term& a : current.args()) args.push_back(normalize_rec(a, rs, budget));
    current = Term::app(current.ctor(), std::move(args));
  }
  for (;;) {
    Term next = root_step(current, rs);
    if (!next.valid()) return current;
    if (budget-- <= 0) throw RewriteDivergence("rewrite step cap exceeded");
    current = normalize_rec(next, rs, budget);
  }
}

}  // namespace

Term normalize(const Term& t, const RewriteSystem& rs) {
  if (rs.rules.empty()) return t;
  int budget = rs.step_cap;
  return normalize_rec(t, rs, budget);
}

bool message_eq(const Term& m, const Term& n, const RewriteSystem& rs) {
  if (m == n) return true;
  return normalize(m, rs) == normalize(n, rs);
}

}  // namespace anpsi
