#include "anpsi/explore.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace anpsi {

std::string CanonNamer::operator()(Name n) {
  if (!names_.is_generated(n)) return names_.display(n);
  auto it = assigned_.find(n.id);
  if (it != assigned_.end()) return it->second;
  std::string display = names_.display(n);
  if (auto hash = display.rfind('#'); hash != std::string::npos) display.resize(hash);
  display += '~';
  display += std::to_string(counter_++);
  return assigned_.emplace(n.id, std::move(display)).first->second;
}

namespace {

// Key used to order and deduplicate successor transitions: the label with
// generated names canonized positionally, plus the normalized target key.
std::string step_key(const Label& label, const std::string& target_key,
                     const NameTable& names) {
  CanonNamer namer(names);
  return print_label(label, NameDisplay(std::ref(namer))) + " => " + target_key;
}

struct Successor {
  Label label;
  Process target;
  std::string key;
};

struct Explorer {
  const InstanceSignature& sig;
  const ExploreOptions& opts;
  NameTable& names;
  std::vector<Trace> results;
#ifdef _OPENMP
  omp_lock_t lock;
#endif

  std::vector<Successor> successors(const Process& state) {
    std::vector<Successor> out;
    for (Transition& t : transitions(sig.unit, state, sig, opts.unfold_budget, names)) {
      std::string tkey = canonical_key(t.target, /*normalize_par=*/true);
      std::string skey = step_key(t.label, tkey, names);
      out.push_back(Successor{std::move(t.label), std::move(t.target), std::move(skey)});
    }
    std::sort(out.begin(), out.end(),
              [](const Successor& a, const Successor& b) { return a.key < b.key; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Successor& a, const Successor& b) { return a.key == b.key; }),
              out.end());
    return out;
  }

  TraceStep make_step(const Label& label, const Assertion& before, const Assertion& after) {
    TraceStep step;
    step.label = label;
    for (const ActionRecord& r : after.done)
      if (!before.done.contains(r)) step.completed.push_back(r);
    for (const ActionRecord& r : step.completed) {
      if (!step.event) step.event = r.event;
      if (r.polarity == Polarity::Input) step.event = r.event;  // delivery wins
    }
    return step;
  }

  void finish(std::vector<TraceStep> steps, const Assertion& final_psi, bool truncated) {
    Trace t;
    t.steps = std::move(steps);
    t.final_assertion = final_psi;
    t.truncated = truncated;
    if (!truncated) {
      std::set<EventId> done_ids;
      for (const ActionRecord& r : t.final_assertion.done) done_ids.insert(r.event);
      t.complete = true;
      for (const EventId& e : opts.required_events)
        if (!done_ids.contains(e)) t.complete = false;
    }
#ifdef _OPENMP
    omp_set_lock(&lock);
    results.push_back(std::move(t));
    omp_unset_lock(&lock);
#else
    results.push_back(std::move(t));
#endif
  }

  void expand_serial(const Process& state, const Assertion& psi,
                     std::vector<TraceStep>& steps, int depth) {
    std::vector<Successor> succ = successors(state);
    if (succ.empty()) {
      finish(steps, psi, /*truncated=*/false);
      return;
    }
    if (depth >= opts.depth_bound) {
      finish(steps, psi, /*truncated=*/true);
      return;
    }
    for (Successor& s : succ) {
      Assertion next_psi = frame(s.target, sig).assertion;
      steps.push_back(make_step(s.label, psi, next_psi));
      expand_serial(s.target, next_psi, steps, depth + 1);
      steps.pop_back();
    }
  }

#ifdef _OPENMP
  // Task-parallel variant: the top of the tree fans out into tasks, deep
  // levels fall back to the serial walker to keep task churn bounded.
  static constexpr int kSpawnDepth = 4;

  void expand_parallel(Process state, Assertion psi, std::vector<TraceStep> steps,
                       int depth) {
    std::vector<Successor> succ = successors(state);
    if (succ.empty()) {
      finish(std::move(steps), psi, false);
      return;
    }
    if (depth >= opts.depth_bound) {
      finish(std::move(steps), psi, true);
      return;
    }
    for (Successor& s : succ) {
      Assertion next_psi = frame(s.target, sig).assertion;
      std::vector<TraceStep> next_steps = steps;
      next_steps.push_back(make_step(s.label, psi, next_psi));
      if (depth < kSpawnDepth) {
        Process target = s.target;
#pragma omp task firstprivate(target, next_psi, next_steps) untied
        expand_parallel(target, next_psi, next_steps, depth + 1);
      } else {
        expand_serial(s.target, next_psi, next_steps, depth + 1);
      }
    }
#pragma omp taskwait
  }
#endif
};

}  // namespace

std::vector<Trace> explore(const Process& p, const InstanceSignature& sig,
                           const ExploreOptions& opts, NameTable& names) {
  Explorer ex{sig, opts, names, {}};
  Assertion psi0 = frame(p, sig).assertion;
#ifdef _OPENMP
  omp_init_lock(&ex.lock);
  if (opts.jobs > 1) {
#pragma omp parallel num_threads(opts.jobs)
    {
#pragma omp single
      ex.expand_parallel(p, psi0, {}, 0);
    }
  } else {
    std::vector<TraceStep> steps;
    ex.expand_serial(p, psi0, steps, 0);
  }
  omp_destroy_lock(&ex.lock);
#else
  std::vector<TraceStep> steps;
  ex.expand_serial(p, psi0, steps, 0);
#endif

  std::vector<std::pair<std::string, Trace>> keyed;
  keyed.reserve(ex.results.size());
  for (Trace& t : ex.results) keyed.emplace_back(trace_key(t, names), std::move(t));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Trace> out;
  out.reserve(keyed.size());
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return out;
}

std::string trace_key(const Trace& t, const NameTable& names) {
  CanonNamer namer(names);
  NameDisplay disp = NameDisplay(std::ref(namer));
  std::ostringstream os;
  for (const TraceStep& s : t.steps) {
    os << print_label(s.label, disp);
    for (const ActionRecord& r : s.completed) os << " |" << print_record(r, disp);
    os << '\n';
  }
  os << (t.truncated ? "truncated" : (t.complete ? "complete" : "stuck")) << '\n';
  std::vector<std::string> recs;
  for (const ActionRecord& r : t.final_assertion.done) recs.push_back(print_record(r, disp));
  std::sort(recs.begin(), recs.end());
  for (const auto& r : recs) os << r << ';';
  for (const auto& [a, b] : t.final_assertion.depends) os << a << '<' << b << ';';
  return os.str();
}

}  // namespace anpsi
