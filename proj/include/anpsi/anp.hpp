#ifndef ANPSI_ANP_HPP
#define ANPSI_ANP_HPP

#include "anpsi/instance.hpp"
#include "anpsi/rewrite.hpp"

namespace anpsi {

/// Channel equality for the ANP instance: a plain term-equality condition,
/// decided syntactically on controller, path and channel name.
Condition anp_channel_eq(const Term& m, const Term& k);

/// Entailment: term equalities are decided by the terms alone (modulo the
/// user equations for message terms); executed-action atoms by containment in
/// the done-set; conjunction clause-wise.
bool anp_entails(const Assertion& psi, const Condition& cond, const RewriteSystem& rs);

/// Composition: done-union plus transitively closed depends-union.
inline Assertion anp_compose(const Assertion& a, const Assertion& b) {
  return compose_assertions(a, b);
}

/// Bundles the ANP operators. condition_sample should hold one executed-atom
/// singleton per declared event plus a few term-equality probes; helpers for
/// building it from a ceremony live in the frontend.
InstanceSignature make_anp_instance(RewriteSystem rules,
                                    std::vector<Condition> condition_sample);

}  // namespace anpsi

#endif
