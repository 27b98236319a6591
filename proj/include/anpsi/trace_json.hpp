#ifndef ANPSI_TRACE_JSON_HPP
#define ANPSI_TRACE_JSON_HPP

#include "anpsi/explore.hpp"
#include "anpsi/pomset.hpp"

namespace anpsi {

/// The structured trace document. Field names (traces, steps, label,
/// event_id, complete, pomset, elements, order) are frozen and golden-tested;
/// generated names render positionally so output is byte-stable across runs
/// and explorer variants.
std::string traces_to_json(const std::vector<Trace>& traces, const NameTable& names);

std::string traces_to_text(const std::vector<Trace>& traces, const NameTable& names);

}  // namespace anpsi

#endif
