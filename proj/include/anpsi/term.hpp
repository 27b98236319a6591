#ifndef ANPSI_TERM_HPP
#define ANPSI_TERM_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "anpsi/names.hpp"

namespace anpsi {

class Term;

/// Reachability path to a configuration: optional controlling identity plus
/// the ancestor-first list of configuration names.
struct ConfigPath {
  std::optional<Name> controller;
  std::vector<Name> path;

  friend bool operator==(const ConfigPath&, const ConfigPath&) = default;
};

/// Immutable term. Leaves are sorted names (variables included); App nodes
/// are constructor applications over the user signature; Chan nodes pair a
/// configuration path with a channel name; Path nodes are bare
/// configuration-path terms.
class Term {
 public:
  enum class Kind : uint8_t { Leaf, App, Chan, Path };

  Term() = default;  // empty handle; only valid after assignment

  static Term leaf(Name n);
  static Term app(std::string ctor, std::vector<Term> args);
  static Term tuple(std::vector<Term> parts);  // app with the reserved ctor
  static Term chan(ConfigPath at, Name channel);
  static Term path(ConfigPath p);

  bool valid() const { return node_ != nullptr; }
  Kind kind() const;

  Name leaf_name() const;
  const std::string& ctor() const;
  std::span<const Term> args() const;
  const ConfigPath& config_path() const;  // Chan and Path nodes
  Name channel_name() const;              // Chan nodes

  bool is_tuple() const;

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

  /// Total structural order (by kind, then contents); names compare by id.
  static int compare(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

  static constexpr const char* kTupleCtor = "tuple";

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Finite map from variable-sorted names to terms. Construction rejects
/// non-variable domain names and range terms that mention domain variables,
/// so application is idempotent.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<Name, Term> mapping);

  bool empty() const { return map_.empty(); }
  const Term* lookup(Name n) const;
  const std::map<Name, Term>& mapping() const { return map_; }

  NameSet range_names() const;

 private:
  std::map<Name, Term> map_;
};

NameSet free_names(const Term& t);
void collect_free_names(const Term& t, NameSet& out);

/// Applies s to every variable leaf. Terms contain no binders, so no capture
/// can occur at this level.
Term substitute(const Term& t, const Substitution& s);

bool mentions(const Term& t, Name n);

/// One-sided syntactic matching: find s over `vars` with
/// substitute(pattern, s) == value. Non-linear patterns check consistency.
std::optional<Substitution> match_term(const NameSet& vars, const Term& pattern,
                                       const Term& value);

std::string print_term(const Term& t, const NameTable& names);

/// Printing with a caller-supplied name renderer (used by trace serialization
/// to give generated names stable positional displays).
using NameDisplay = std::function<std::string(Name)>;
std::string print_term(const Term& t, const NameDisplay& disp);

/// Terms carry no binders, so alpha-equivalence is structural equality.
inline bool alpha_equivalent(const Term& a, const Term& b) { return a == b; }

}  // namespace anpsi

#endif
