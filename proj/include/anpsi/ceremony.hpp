#ifndef ANPSI_CEREMONY_HPP
#define ANPSI_CEREMONY_HPP

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "anpsi/process.hpp"
#include "anpsi/rewrite.hpp"

namespace anpsi {

struct Diagnostic {
  enum class Severity : uint8_t { Error, Warning };
  Severity severity = Severity::Error;
  int line = 0;
  int col = 0;
  std::string code;
  std::string message;
};

/// `file:line:col: severity[code]: message`
std::string format_diagnostic(const Diagnostic& d, const std::string& filename);

bool has_errors(const std::vector<Diagnostic>& ds);

enum class EventKind : uint8_t { Output, Input, Fresh, Compute, Test };

struct ConfigDecl {
  Name name;
  std::optional<Name> parent;
  std::optional<Name> controller;
  int line = 0;
};

struct ChannelDecl {
  Name name;
  std::string kind;  // cyb, vis, kyb, loc, ...
  Name endpoint;     // configuration the channel term is attached at
  Name peer;
  int line = 0;
};

struct CtorDecl {
  std::string name;
  int arity = 0;
  int line = 0;
};

struct RuleDecl {
  Term lhs;
  Term rhs;
  NameSet variables;
  int line = 0;
};

struct ConstantDecl {
  Name name;
  std::vector<Name> placement;  // configurations that initially know it
  int line = 0;
};

struct EventDecl {
  EventId id;
  EventKind kind = EventKind::Output;
  Name config;
  std::optional<Name> channel;   // Output/Input
  Term payload;                  // Output term / Input pattern
  std::vector<Name> binds;       // Input: fresh pattern variables; Fresh/Compute: the target
  Term compute_rhs;              // Compute
  Term test_lhs, test_rhs;       // Test
  std::vector<EventId> deps;
  int line = 0;
};

/// Parsed ceremony. Owns its name table; all Name values in the spec resolve
/// against it.
struct CeremonySpec {
  std::string name;
  std::vector<Name> identities;
  std::vector<ConfigDecl> configs;
  std::vector<ChannelDecl> channels;
  std::vector<CtorDecl> ctors;
  std::vector<RuleDecl> rules;
  std::vector<ConstantDecl> constants;
  std::vector<EventDecl> events;
  std::vector<DependPair> desired_run;
  std::shared_ptr<NameTable> names;

  const ConfigDecl* find_config(Name n) const;
  const ChannelDecl* find_channel(Name n) const;
  const EventDecl* find_event(const EventId& id) const;

  /// Ancestor-first path through the containment forest, with the controlling
  /// identity of the configuration itself (if any).
  ConfigPath config_path(Name config) const;

  RewriteSystem rewrite_system() const;
};

/// Structural equality across name tables (compares displays, not ids).
bool specs_equal(const CeremonySpec& a, const CeremonySpec& b);

struct ParseResult {
  std::optional<CeremonySpec> spec;
  std::vector<Diagnostic> diagnostics;
};

/// Never throws on arbitrary bytes; failures come back as diagnostics.
ParseResult parse_ceremony(std::string_view source);

std::vector<Diagnostic> validate(const CeremonySpec& spec);

/// Per-configuration binding discipline: walks events in declaration order,
/// tracking which variables each configuration has bound. Input events bind
/// their first-occurring unbound variables; everything else must use bound
/// variables or constants placed at the configuration.
struct BindingInfo {
  std::map<EventId, std::vector<Name>> pattern_binds;  // Input events only
  std::vector<Diagnostic> diagnostics;
};

BindingInfo analyze_bindings(const CeremonySpec& spec);

/// Canonical source; parse_ceremony(pretty_print(s)) is structurally equal
/// to s, and printing is a fixpoint after one cycle.
std::string pretty_print(const CeremonySpec& spec);

/// §-encoding of the ceremony into one psi process. Requires a spec that
/// validates without errors (throws std::invalid_argument otherwise).
Process compile(const CeremonySpec& spec);

/// Compile-time metadata linking event ids to the terms the compiler used;
/// needed by the analyzer and tests to build queries without re-deriving
/// term shapes.
struct CompiledEventInfo {
  EventId id;
  EventKind kind = EventKind::Output;
  Polarity polarity = Polarity::Output;
  Term channel_term;  // declared channel term; local events: their loc term
};

struct CompileOutput {
  Process process;
  std::vector<CompiledEventInfo> events;
};

CompileOutput compile_with_info(const CeremonySpec& spec);

}  // namespace anpsi

#endif
