#include "anpsi/names.hpp"

#include <stdexcept>

namespace anpsi {

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::Config: return "configuration";
    case Sort::Chan: return "channel";
    case Sort::Ident: return "identity";
    case Sort::Msg: return "message";
    case Sort::Var: return "variable";
  }
  return "?";
}

Name NameTable::intern(Sort sort, std::string_view text) {
  std::lock_guard lock(mu_);
  for (uint32_t i = 0; i < entries_.size(); ++i) {
    const Entry& e = entries_[i];
    if (!e.generated && e.sort == sort && e.display == text)
      return Name{i, sort};
  }
  entries_.push_back(Entry{std::string(text), sort, false});
  return Name{static_cast<uint32_t>(entries_.size() - 1), sort};
}

Name NameTable::fresh(Sort sort, std::string_view hint, const NameSet& avoid) {
  std::lock_guard lock(mu_);
  // Ids are never reused, so a new id cannot collide with `avoid`; the loop
  // below only guards against a caller handing us names from another table.
  for (;;) {
    uint32_t id = static_cast<uint32_t>(entries_.size());
    Name candidate{id, sort};
    if (avoid.contains(candidate)) {
      entries_.push_back(Entry{"", sort, true});  // burn the id
      continue;
    }
    std::string display(hint.empty() ? "n" : hint);
    display += '#';
    display += std::to_string(id);
    entries_.push_back(Entry{std::move(display), sort, true});
    return candidate;
  }
}

const std::string& NameTable::display(Name n) const {
  std::lock_guard lock(mu_);
  if (n.id >= entries_.size()) throw std::out_of_range("Name not in table");
  return entries_[n.id].display;
}

bool NameTable::is_generated(Name n) const {
  std::lock_guard lock(mu_);
  if (n.id >= entries_.size()) throw std::out_of_range("Name not in table");
  return entries_[n.id].generated;
}

size_t NameTable::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

}  // namespace anpsi
