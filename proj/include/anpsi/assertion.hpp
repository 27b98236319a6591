#ifndef ANPSI_ASSERTION_HPP
#define ANPSI_ASSERTION_HPP

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anpsi/term.hpp"

namespace anpsi {

using EventId = std::string;

enum class Polarity : uint8_t { Input, Output };

std::string_view polarity_name(Polarity p);

/// A recorded communication occurrence: the event id gives occurrence
/// identity, so two syntactically identical communications at different run
/// positions stay distinguishable.
struct ActionRecord {
  EventId event;
  Polarity polarity = Polarity::Output;
  Term channel;
  Term payload;  // ground once the record enters an assertion

  friend bool operator==(const ActionRecord& a, const ActionRecord& b) {
    return a.event == b.event && a.polarity == b.polarity &&
           a.channel == b.channel && a.payload == b.payload;
  }
  friend bool operator<(const ActionRecord& a, const ActionRecord& b) {
    if (a.event != b.event) return a.event < b.event;
    if (a.polarity != b.polarity) return a.polarity < b.polarity;
    if (int c = Term::compare(a.channel, b.channel)) return c < 0;
    return Term::compare(a.payload, b.payload) < 0;
  }
};

/// Condition/query-side view of a record. The event id is always exact;
/// polarity, channel and payload may be left wild (guards cannot know payloads
/// bound in other parallel components).
struct ActionPattern {
  EventId event;
  std::optional<Polarity> polarity;
  std::optional<Term> channel;
  std::optional<Term> payload;

  bool matches(const ActionRecord& r) const {
    if (event != r.event) return false;
    if (polarity && *polarity != r.polarity) return false;
    if (channel && !(*channel == r.channel)) return false;
    if (payload && !(*payload == r.payload)) return false;
    return true;
  }

  friend bool operator==(const ActionPattern&, const ActionPattern&) = default;
};

/// Composition produced a reflexive dependency: the assembled run is not a
/// partial order.
struct CycleError : std::runtime_error {
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

using DependPair = std::pair<EventId, EventId>;

/// The ANP assertion: executed actions plus dependency pairs between event
/// occurrences, kept transitively closed and irreflexive. The pi instance uses
/// the empty assertion only.
struct Assertion {
  std::set<ActionRecord> done;
  std::set<DependPair> depends;

  bool empty() const { return done.empty() && depends.empty(); }
  friend bool operator==(const Assertion&, const Assertion&) = default;
};

/// Union of done-sets; transitive closure of the union of depends. Throws
/// CycleError if closure yields a ≺ a.
Assertion compose_assertions(const Assertion& a, const Assertion& b);

/// Closes `pairs` transitively in place; throws CycleError on reflexivity.
void close_depends(std::set<DependPair>& pairs);

/// A guard: flattened conjunction of term equalities and executed-action
/// atoms. An empty condition is the tautology.
class Condition {
 public:
  struct TermEq {
    Term lhs;
    Term rhs;
    friend bool operator==(const TermEq&, const TermEq&) = default;
  };

  static Condition term_eq(Term lhs, Term rhs);
  static Condition done(std::vector<ActionPattern> patterns);
  static Condition conj(std::vector<Condition> parts);  // flattens
  static Condition truth() { return Condition(); }

  const std::vector<TermEq>& equalities() const { return eqs_; }
  const std::vector<ActionPattern>& done_patterns() const { return pats_; }
  bool is_trivial() const { return eqs_.empty() && pats_.empty(); }

  friend bool operator==(const Condition&, const Condition&) = default;

 private:
  std::vector<TermEq> eqs_;
  std::vector<ActionPattern> pats_;
};

std::string print_assertion(const Assertion& a, const NameTable& names);
std::string print_condition(const Condition& c, const NameTable& names);
std::string print_record(const ActionRecord& r, const NameTable& names);
std::string print_record(const ActionRecord& r, const NameDisplay& disp);

}  // namespace anpsi

#endif
