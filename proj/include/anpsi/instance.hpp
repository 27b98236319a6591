#ifndef ANPSI_INSTANCE_HPP
#define ANPSI_INSTANCE_HPP

#include <functional>
#include <vector>

#include "anpsi/assertion.hpp"

namespace anpsi {

/// The psi-calculus parameter bundle. Instances plug in channel equality,
/// entailment, assertion composition and the unit; condition_sample is the
/// finite probe set used to falsify assertion equivalence (the definition
/// quantifies over all conditions, which is uncheckable).
struct InstanceSignature {
  std::function<Condition(const Term&, const Term&)> channel_eq;
  std::function<bool(const Assertion&, const Condition&)> entails;
  std::function<Assertion(const Assertion&, const Assertion&)> compose;
  Assertion unit;
  std::vector<Condition> condition_sample;
};

/// Equivalence over the instance's probe set: equal entailment on every
/// sampled condition.
bool assertion_equivalent(const Assertion& a, const Assertion& b,
                          const InstanceSignature& sig);

}  // namespace anpsi

#endif
