#include <sstream>

#include "anpsi/ceremony.hpp"

namespace anpsi {

std::string pretty_print(const CeremonySpec& spec) {
  const NameTable& names = *spec.names;
  std::ostringstream os;
  os << "ceremony " << spec.name << '\n';

  if (!spec.identities.empty()) {
    os << "\nidentities";
    for (Name i : spec.identities) os << ' ' << names.display(i);
    os << '\n';
  }

  if (!spec.configs.empty()) {
    os << "\nconfigs\n";
    for (const ConfigDecl& c : spec.configs) {
      os << "  " << names.display(c.name);
      if (c.parent) os << " parent " << names.display(*c.parent);
      if (c.controller) os << " controlled " << names.display(*c.controller);
      os << '\n';
    }
  }

  if (!spec.channels.empty()) {
    os << "\nchannels\n";
    for (const ChannelDecl& c : spec.channels)
      os << "  " << names.display(c.name) << " kind " << c.kind << " at "
         << names.display(c.endpoint) << " peer " << names.display(c.peer) << '\n';
  }

  if (!spec.ctors.empty() || !spec.rules.empty()) {
    os << "\nsignature\n";
    for (const CtorDecl& c : spec.ctors) os << "  " << c.name << '/' << c.arity << '\n';
    for (const RuleDecl& r : spec.rules)
      os << "  rule " << print_term(r.lhs, names) << " -> " << print_term(r.rhs, names)
         << '\n';
  }

  if (!spec.constants.empty()) {
    os << "\nconstants\n";
    for (const ConstantDecl& c : spec.constants) {
      os << "  " << names.display(c.name) << " at";
      for (Name p : c.placement) os << ' ' << names.display(p);
      os << '\n';
    }
  }

  if (!spec.events.empty()) {
    os << "\nevents\n";
    for (const EventDecl& e : spec.events) {
      os << "  " << e.id << ' ';
      switch (e.kind) {
        case EventKind::Output:
          os << "out " << names.display(*e.channel) << " at " << names.display(e.config)
             << " payload " << print_term(e.payload, names);
          break;
        case EventKind::Input:
          os << "in " << names.display(*e.channel) << " at " << names.display(e.config)
             << " payload " << print_term(e.payload, names);
          break;
        case EventKind::Fresh:
          os << "fresh " << names.display(e.binds.front()) << " at "
             << names.display(e.config);
          break;
        case EventKind::Compute:
          os << "compute " << names.display(e.binds.front()) << " = "
             << print_term(e.compute_rhs, names) << " at " << names.display(e.config);
          break;
        case EventKind::Test:
          os << "test " << print_term(e.test_lhs, names) << " == "
             << print_term(e.test_rhs, names) << " at " << names.display(e.config);
          break;
      }
      if (!e.deps.empty()) {
        os << " after ";
        for (size_t i = 0; i < e.deps.size(); ++i) {
          if (i) os << ", ";
          os << e.deps[i];
        }
      }
      os << '\n';
    }
  }

  if (!spec.desired_run.empty()) {
    os << "\nrun\n";
    for (const DependPair& p : spec.desired_run)
      os << "  " << p.first << " < " << p.second << '\n';
  }

  return os.str();
}

}  // namespace anpsi
