#include "anpsi/anp.hpp"

#include <memory>

namespace anpsi {

Condition anp_channel_eq(const Term& m, const Term& k) {
  return Condition::term_eq(m, k);
}

bool anp_entails(const Assertion& psi, const Condition& cond, const RewriteSystem& rs) {
  for (const auto& eq : cond.equalities())
    if (!message_eq(eq.lhs, eq.rhs, rs)) return false;
  for (const ActionPattern& p : cond.done_patterns()) {
    bool hit = false;
    for (const ActionRecord& r : psi.done)
      if (p.matches(r)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

InstanceSignature make_anp_instance(RewriteSystem rules,
                                    std::vector<Condition> condition_sample) {
  auto rs = std::make_shared<RewriteSystem>(std::move(rules));
  InstanceSignature sig;
  sig.channel_eq = [](const Term& m, const Term& k) { return anp_channel_eq(m, k); };
  sig.entails = [rs](const Assertion& psi, const Condition& c) {
    return anp_entails(psi, c, *rs);
  };
  sig.compose = [](const Assertion& a, const Assertion& b) { return anp_compose(a, b); };
  sig.unit = Assertion{};
  sig.condition_sample = std::move(condition_sample);
  return sig;
}

}  // namespace anpsi
