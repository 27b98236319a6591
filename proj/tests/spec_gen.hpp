#ifndef ANPSI_TESTS_SPEC_GEN_HPP
#define ANPSI_TESTS_SPEC_GEN_HPP

// Random ceremony generator. Builds valid specs by construction: forest
// containment, declared references, one communication pair per channel,
// acyclic dependencies, and per-configuration variable binding discipline.

#include <random>
#include <sstream>

#include "anpsi/ceremony.hpp"

namespace anpsi::spec_gen {

template <typename Rng>
std::string random_ceremony_source(Rng& rng, int max_events = 8) {
  std::uniform_int_distribution<int> d2(0, 1), d3(0, 2);
  int n_idents = 1 + d2(rng);
  int n_configs = 2 + d3(rng);
  std::uniform_int_distribution<int> ev_count(2, max_events);
  int n_events = ev_count(rng);

  std::ostringstream os;
  os << "ceremony G" << n_events << n_configs << "\n\nidentities";
  for (int i = 0; i < n_idents; ++i) os << " id" << i;
  os << "\n\nconfigs\n";
  for (int i = 0; i < n_configs; ++i) {
    os << "  cfg" << i;
    if (i > 0 && d2(rng)) os << " parent cfg" << (i - 1) / 2;  // forest by construction
    if (d2(rng)) os << " controlled id" << (i % n_idents);
    os << '\n';
  }

  // One channel per planned communication pair, plus a couple of constants.
  struct Ev {
    int kind;  // 0 out,1 in,2 fresh,3 compute,4 test
    int config;
    int channel = -1;
    std::vector<int> deps;
  };
  std::vector<Ev> evs;
  std::vector<std::pair<int, int>> chans;              // endpoint, peer configs
  std::vector<std::vector<std::string>> bound(n_configs);  // bound vars per config
  std::uniform_int_distribution<int> cfg_pick(0, n_configs - 1);

  for (int i = 0; i < n_events; ++i) {
    Ev e;
    int choice = d3(rng);
    if (choice == 0 && i + 1 < n_events) {
      // communication pair: out at cfg a, in at cfg b
      int a = cfg_pick(rng), b = cfg_pick(rng);
      if (a == b) b = (b + 1) % n_configs;
      int ch = static_cast<int>(chans.size());
      chans.emplace_back(a, b);
      e.kind = 0;
      e.config = a;
      e.channel = ch;
      evs.push_back(e);
      Ev in;
      in.kind = 1;
      in.config = b;
      in.channel = ch;
      in.deps.push_back(i);  // the sender
      evs.push_back(in);
      ++i;
      continue;
    }
    e.kind = 2 + d3(rng) % 3;
    e.config = cfg_pick(rng);
    evs.push_back(e);
  }

  // Random extra dependencies, always backward (acyclic).
  for (size_t i = 1; i < evs.size(); ++i) {
    if (d2(rng)) {
      std::uniform_int_distribution<size_t> dep_pick(0, i - 1);
      size_t dep = dep_pick(rng);
      bool have = false;
      for (int d : evs[i].deps) have = have || d == static_cast<int>(dep);
      if (!have) evs[i].deps.push_back(static_cast<int>(dep));
    }
  }

  os << "\nchannels\n";
  for (size_t c = 0; c < chans.size(); ++c)
    os << "  ch" << c << " kind cyb at cfg" << chans[c].first << " peer cfg"
       << chans[c].second << '\n';
  os << "\nsignature\n  h/1\n\nconstants\n  k0 at";
  for (int i = 0; i < n_configs; ++i) os << " cfg" << i;
  os << '\n';

  os << "\nevents\n";
  int var_counter = 0;
  for (size_t i = 0; i < evs.size(); ++i) {
    Ev& e = evs[i];
    os << "  e" << i << ' ';
    auto deps_suffix = [&]() {
      if (e.deps.empty()) return std::string();
      std::string s = " after ";
      for (size_t k = 0; k < e.deps.size(); ++k)
        s += (k ? std::string(", e") : std::string("e")) + std::to_string(e.deps[k]);
      return s;
    };
    switch (e.kind) {
      case 0: {
        // payload: a bound var if any, else the constant
        std::string payload = "k0";
        if (!bound[e.config].empty() && d2(rng)) {
          std::uniform_int_distribution<size_t> bp(0, bound[e.config].size() - 1);
          payload = bound[e.config][bp(rng)];
        }
        os << "out ch" << e.channel << " at cfg" << e.config << " payload " << payload
           << deps_suffix();
        break;
      }
      case 1: {
        std::string v = "v" + std::to_string(var_counter++);
        bound[e.config].push_back(v);
        os << "in ch" << e.channel << " at cfg" << e.config << " payload " << v
           << deps_suffix();
        break;
      }
      case 2: {
        std::string v = "v" + std::to_string(var_counter++);
        bound[e.config].push_back(v);
        os << "fresh " << v << " at cfg" << e.config << deps_suffix();
        break;
      }
      case 3: {
        std::string v = "v" + std::to_string(var_counter++);
        std::string arg = bound[e.config].empty() ? "k0" : bound[e.config].back();
        bound[e.config].push_back(v);
        os << "compute " << v << " = h(" << arg << ") at cfg" << e.config << deps_suffix();
        break;
      }
      default: {
        std::string arg = bound[e.config].empty() ? "k0" : bound[e.config].back();
        os << "test " << arg << " == " << arg << " at cfg" << e.config << deps_suffix();
        break;
      }
    }
    os << '\n';
  }

  os << "\nrun\n";
  for (size_t i = 0; i < evs.size(); ++i)
    for (int d : evs[i].deps) os << "  e" << d << " < e" << i << '\n';
  return os.str();
}

}  // namespace anpsi::spec_gen

#endif
