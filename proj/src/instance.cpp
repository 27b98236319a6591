#include "anpsi/instance.hpp"

namespace anpsi {

bool assertion_equivalent(const Assertion& a, const Assertion& b,
                          const InstanceSignature& sig) {
  for (const Condition& c : sig.condition_sample)
    if (sig.entails(a, c) != sig.entails(b, c)) return false;
  return true;
}

}  // namespace anpsi
