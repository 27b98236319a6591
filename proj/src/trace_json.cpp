#include "anpsi/trace_json.hpp"

#include <sstream>

#include "json.hpp"

namespace anpsi {

namespace {

nlohmann::ordered_json pomset_to_json(const PomsetRun& run) {
  nlohmann::ordered_json j;
  j["elements"] = nlohmann::ordered_json::array();
  for (const ActionRecord& r : run.elements) j["elements"].push_back(r.event);
  j["order"] = nlohmann::ordered_json::array();
  for (const auto& [a, b] : run.order) j["order"].push_back({a, b});
  return j;
}

}  // namespace

std::string traces_to_json(const std::vector<Trace>& traces, const NameTable& names) {
  CanonNamer namer(names);
  NameDisplay disp = NameDisplay(std::ref(namer));
  nlohmann::ordered_json doc;
  doc["traces"] = nlohmann::ordered_json::array();
  for (const Trace& t : traces) {
    nlohmann::ordered_json jt;
    jt["steps"] = nlohmann::ordered_json::array();
    for (const TraceStep& s : t.steps) {
      nlohmann::ordered_json js;
      js["label"] = print_label(s.label, disp);
      if (s.event)
        js["event_id"] = *s.event;
      else
        js["event_id"] = nullptr;
      jt["steps"].push_back(std::move(js));
    }
    jt["complete"] = t.complete;
    jt["pomset"] = pomset_to_json(extract_pomset(t));
    doc["traces"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

std::string traces_to_text(const std::vector<Trace>& traces, const NameTable& names) {
  CanonNamer namer(names);
  NameDisplay disp = NameDisplay(std::ref(namer));
  std::ostringstream os;
  for (size_t i = 0; i < traces.size(); ++i) {
    const Trace& t = traces[i];
    os << "trace " << (i + 1) << " ("
       << (t.truncated ? "truncated" : (t.complete ? "complete" : "stuck")) << ", "
       << t.steps.size() << " steps)\n";
    for (size_t k = 0; k < t.steps.size(); ++k) {
      const TraceStep& s = t.steps[k];
      os << "  " << (k + 1) << ". " << print_label(s.label, disp);
      if (s.event) os << "  [" << *s.event << ']';
      for (const ActionRecord& r : s.completed) os << "  " << print_record(r, disp);
      os << '\n';
    }
    PomsetRun run = extract_pomset(t);
    os << "  pomset elements:";
    for (const ActionRecord& r : run.elements) os << ' ' << r.event;
    os << "\n  pomset order:";
    for (const auto& [a, b] : run.order) os << ' ' << a << '<' << b;
    os << '\n';
  }
  return os.str();
}

}  // namespace anpsi
