#ifndef ANPSI_POMSET_HPP
#define ANPSI_POMSET_HPP

#include "anpsi/ceremony.hpp"
#include "anpsi/explore.hpp"

namespace anpsi {

struct InconsistentAssertion : std::runtime_error {
  explicit InconsistentAssertion(const std::string& what) : std::runtime_error(what) {}
};

/// A partially ordered run: executed records with the strict order between
/// their event occurrences.
struct PomsetRun {
  std::set<ActionRecord> elements;
  std::set<DependPair> order;  // over event ids of elements

  const ActionRecord* find(const EventId& id) const;
};

/// elements = final done-set; order = final depends restricted to done.
/// Throws InconsistentAssertion when a dependency endpoint executed during the
/// trace but left no record.
PomsetRun extract_pomset(const Trace& t);

struct RunVerdict {
  enum class Kind : uint8_t { Match, MissingPairs, ExtraElements };
  Kind kind = Kind::Match;
  std::vector<DependPair> missing_pairs;
  std::vector<EventId> extra_elements;    // executed but not declared
  std::vector<EventId> missing_elements;  // declared but not executed
};

/// Match iff the run covers exactly the spec's events and its order contains
/// every desired pair.
RunVerdict check_desired_run(const PomsetRun& run, const CeremonySpec& spec);

}  // namespace anpsi

#endif
