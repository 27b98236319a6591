#include "anpsi/pomset.hpp"

namespace anpsi {

const ActionRecord* PomsetRun::find(const EventId& id) const {
  for (const ActionRecord& r : elements)
    if (r.event == id) return &r;
  return nullptr;
}

PomsetRun extract_pomset(const Trace& t) {
  PomsetRun run;
  run.elements = t.final_assertion.done;
  std::set<EventId> done_ids;
  for (const ActionRecord& r : run.elements) done_ids.insert(r.event);

  std::set<EventId> executed;
  for (const TraceStep& s : t.steps)
    for (const ActionRecord& r : s.completed) executed.insert(r.event);

  for (const DependPair& p : t.final_assertion.depends) {
    bool have_a = done_ids.contains(p.first);
    bool have_b = done_ids.contains(p.second);
    if (have_a && have_b) {
      run.order.insert(p);
      continue;
    }
    if (executed.contains(p.first) && executed.contains(p.second))
      throw InconsistentAssertion("dependency pair " + p.first + " < " + p.second +
                                  " has an executed endpoint missing from the done-set");
  }
  return run;
}

RunVerdict check_desired_run(const PomsetRun& run, const CeremonySpec& spec) {
  RunVerdict v;
  std::set<EventId> declared;
  for (const EventDecl& e : spec.events) declared.insert(e.id);
  std::set<EventId> executed;
  for (const ActionRecord& r : run.elements) executed.insert(r.event);

  for (const EventId& e : executed)
    if (!declared.contains(e)) v.extra_elements.push_back(e);
  for (const EventId& e : declared)
    if (!executed.contains(e)) v.missing_elements.push_back(e);
  if (!v.extra_elements.empty() || !v.missing_elements.empty()) {
    v.kind = RunVerdict::Kind::ExtraElements;
    return v;
  }

  for (const DependPair& p : spec.desired_run)
    if (!run.order.contains(p)) v.missing_pairs.push_back(p);
  v.kind = v.missing_pairs.empty() ? RunVerdict::Kind::Match : RunVerdict::Kind::MissingPairs;
  return v;
}

}  // namespace anpsi
