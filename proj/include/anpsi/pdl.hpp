#ifndef ANPSI_PDL_HPP
#define ANPSI_PDL_HPP

#include "anpsi/assertion.hpp"

namespace anpsi {

/// The two basic PDL formulas: an action has been executed; one action has
/// been executed before another.
struct PdlQuery {
  enum class Kind : uint8_t { Happened, Before };
  Kind kind = Kind::Happened;
  ActionPattern first;
  ActionPattern second;  // Before only
};

/// Happened(p): some done record matches p. Before(p,q): matching records a,b
/// are both done and a's occurrence precedes b's in the depends order.
bool eval_pdl(const Assertion& psi, const PdlQuery& q);

/// Surface syntax: `happened(<event_id>)` or `before(<event_id>, <event_id>)`.
std::optional<PdlQuery> parse_pdl_query(std::string_view text, std::string& error);

}  // namespace anpsi

#endif
