#ifndef ANPSI_PROCESS_HPP
#define ANPSI_PROCESS_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "anpsi/instance.hpp"

namespace anpsi {

struct WellFormednessError : std::runtime_error {
  explicit WellFormednessError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable psi-process AST. Nodes are shared; all mutation builds new trees.
class Process {
 public:
  enum class Kind : uint8_t { Nil, Output, Input, Case, Restrict, Par, Repl, Assert };

  struct Branch;

  Process();  // Nil

  static Process nil();
  static Process output(Term channel, Term payload, Process cont);
  static Process input(Term channel, std::vector<Name> vars, Term pattern, Process cont);
  static Process choice(std::vector<Branch> branches);
  static Process restrict(Name n, Process body);
  static Process par(Process left, Process right);
  static Process repl(Process body);
  static Process assertion(Assertion psi);

  Kind kind() const;

  const Term& channel() const;                 // Output, Input
  const Term& payload() const;                 // Output
  const std::vector<Name>& pattern_vars() const;  // Input
  const Term& pattern() const;                 // Input
  const Process& continuation() const;         // Output, Input
  std::span<const Branch> branches() const;    // Case
  Name bound_name() const;                     // Restrict
  const Process& body() const;                 // Restrict, Repl
  const Process& left() const;                 // Par
  const Process& right() const;                // Par
  const Assertion& psi() const;                // Assert

  friend bool operator==(const Process& a, const Process& b);

 private:
  struct Node;
  explicit Process(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Process::Branch {
  Condition guard;
  Process proc;
};

/// The frame: outermost assertions under their local binders. Binder names
/// are globally unique by construction (the name table never reuses ids and
/// replication unfolding freshens), so no renaming-apart is needed when
/// frames meet.
struct Frame {
  std::vector<Name> binders;
  Assertion assertion;
};

Frame frame(const Process& p, const InstanceSignature& sig);

NameSet free_names(const Process& p);
NameSet free_names(const Condition& c);
NameSet free_names(const Assertion& a);

/// Capture-avoiding substitution; clashing binders are renamed via `names`.
Process substitute(const Process& p, const Substitution& s, NameTable& names);

/// Alpha-copy: every binder (restriction names, input pattern variables)
/// renamed to a fresh name. Used when unfolding replication so binder names
/// stay globally unique.
Process freshen_binders(const Process& p, NameTable& names);

/// Throws WellFormednessError unless input patterns have pairwise-distinct,
/// variable-sorted variables that each occur in the pattern body.
void check_well_formed(const Process& p);

/// Binder-canonical key: equal iff processes are alpha-equivalent. With
/// `normalize_par`, parallel compositions are flattened, Nil children dropped
/// and children sorted, giving the state-deduplication normal form.
std::string canonical_key(const Process& p, bool normalize_par = false);

bool alpha_equivalent(const Process& a, const Process& b);

std::string print_process(const Process& p, const NameTable& names);

/// Transition labels.
struct Label {
  enum class Kind : uint8_t { Out, In, Tau };
  Kind kind = Kind::Tau;
  Term channel;                // Out, In
  std::vector<Name> extruded;  // Out: names opened by this transition
  Term payload;                // Out: sent term; In: pattern shape

  static Label tau() { return Label{}; }
  friend bool operator==(const Label&, const Label&) = default;
};

std::string print_label(const Label& l, const NameTable& names);
std::string print_label(const Label& l, const NameDisplay& disp);

}  // namespace anpsi

#endif
