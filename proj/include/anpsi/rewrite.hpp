#ifndef ANPSI_REWRITE_HPP
#define ANPSI_REWRITE_HPP

#include <stdexcept>
#include <vector>

#include "anpsi/term.hpp"

namespace anpsi {

/// Thrown when normalization exceeds the step cap; signals a bad user
/// equation set rather than an engine bug.
struct RewriteDivergence : std::runtime_error {
  explicit RewriteDivergence(const std::string& what) : std::runtime_error(what) {}
};

/// Directed ground-rewrite rule lhs -> rhs. Variables of rhs must be a subset
/// of the variables of lhs (checked by the ceremony validator).
struct RewriteRule {
  Term lhs;
  Term rhs;
  NameSet variables;  // rule variables occurring in lhs
};

struct RewriteSystem {
  std::vector<RewriteRule> rules;
  int step_cap = 1000;
};

/// Innermost normalization under the step cap.
Term normalize(const Term& t, const RewriteSystem& rs);

/// Equality modulo the user equations: both sides reach the same normal form.
bool message_eq(const Term& m, const Term& n, const RewriteSystem& rs);

}  // namespace anpsi

#endif
