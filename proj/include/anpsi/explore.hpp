#ifndef ANPSI_EXPLORE_HPP
#define ANPSI_EXPLORE_HPP

#include "anpsi/transitions.hpp"

namespace anpsi {

struct TraceStep {
  Label label;
  std::vector<ActionRecord> completed;  // done-set delta of this step
  std::optional<EventId> event;         // attribution: input side of a com, else the sole record
};

struct Trace {
  std::vector<TraceStep> steps;
  Assertion final_assertion;
  bool truncated = false;  // stopped by the depth bound with moves remaining
  bool complete = false;   // maximal, not truncated, every required event done
};

struct ExploreOptions {
  int depth_bound = 64;
  int unfold_budget = 2;
  std::set<EventId> required_events;  // completeness criterion; may be empty
  int jobs = 1;                       // >1 uses the OpenMP task explorer
};

/// Exhaustive bounded enumeration of maximal traces, depth-first from p.
/// Successor sets are deduplicated and ordered by a canonical key (binder
/// renaming plus parallel normalization), so results are deterministic; the
/// returned list is sorted by trace key with duplicates removed. The serial
/// explorer (jobs <= 1) is the reference; the parallel one must produce the
/// same trace set.
std::vector<Trace> explore(const Process& p, const InstanceSignature& sig,
                           const ExploreOptions& opts, NameTable& names);

/// Canonical serialization of one trace: generated names are renamed by first
/// occurrence, so two runs of the engine (or the serial and parallel
/// explorers) yield comparable keys.
std::string trace_key(const Trace& t, const NameTable& names);

/// Renders generated names positionally ("hint~k"); interned names keep their
/// display. One namer per document keeps output byte-stable across runs.
class CanonNamer {
 public:
  explicit CanonNamer(const NameTable& names) : names_(names) {}
  std::string operator()(Name n);

 private:
  const NameTable& names_;
  std::map<uint32_t, std::string> assigned_;
  int counter_ = 0;
};

}  // namespace anpsi

#endif
