#ifndef ANPSI_TRANSITIONS_HPP
#define ANPSI_TRANSITIONS_HPP

#include "anpsi/process.hpp"

namespace anpsi {

/// Unique matching substitution over the pattern variables, or nullopt.
/// Throws WellFormednessError on malformed patterns (duplicate variables,
/// variables missing from the body).
std::optional<Substitution> match_pattern(const std::vector<Name>& vars,
                                          const Term& pattern, const Term& value);

struct Transition {
  Label label;
  Process target;
};

/// Every derivable single step of p in the given assertion context.
///
/// Output and input prefixes fire unconditionally. A free input fires once,
/// symbolically: the label carries the pattern instantiated with fresh
/// witnesses and the continuation binds those witnesses under restrictions,
/// so results stay finite and deterministic up to alpha-equivalence.
/// Communication pairs output and input offers across parallel compositions
/// when the composed frames entail channel equality and the pattern matches.
/// Replication unfolds at most `unfold_budget` times per call, with binders
/// freshened per copy.
std::vector<Transition> transitions(const Assertion& context, const Process& p,
                                    const InstanceSignature& sig, int unfold_budget,
                                    NameTable& names);

}  // namespace anpsi

#endif
