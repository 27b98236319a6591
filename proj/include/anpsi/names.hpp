#ifndef ANPSI_NAMES_HPP
#define ANPSI_NAMES_HPP

#include <cstdint>
#include <deque>
#include <mutex>
#include <set>
#include <string>
#include <string_view>

namespace anpsi {

/// Name sorts. Configuration, channel and identity names form the three
/// nominal sets of the ANP encoding; message names cover constants and fresh
/// values; variable names are the only substitutable sort.
enum class Sort : uint8_t { Config, Chan, Ident, Msg, Var };

std::string_view sort_name(Sort s);

/// A sorted atom. Identity is the session-unique id; the display string lives
/// in the owning NameTable and need not be unique.
struct Name {
  uint32_t id = 0;
  Sort sort = Sort::Msg;

  friend bool operator==(const Name& a, const Name& b) { return a.id == b.id; }
  friend auto operator<=>(const Name& a, const Name& b) { return a.id <=> b.id; }
};

using NameSet = std::set<Name>;

/// Session-scoped name supply. Interned names come from source text; fresh
/// names append a counter to a display hint so traces stay reproducible.
/// fresh() and intern() are the only mutating entry points and are guarded by
/// a mutex, so concurrent explorers can share one table.
class NameTable {
 public:
  NameTable() = default;
  NameTable(const NameTable&) = delete;
  NameTable& operator=(const NameTable&) = delete;

  /// Returns the existing name for (sort, text) or creates one.
  Name intern(Sort sort, std::string_view text);

  /// Always returns a new name, distinct from every name handed out before
  /// and from everything in `avoid`.
  Name fresh(Sort sort, std::string_view hint, const NameSet& avoid = {});

  const std::string& display(Name n) const;
  bool is_generated(Name n) const;
  size_t size() const;

 private:
  struct Entry {
    std::string display;
    Sort sort;
    bool generated;
  };

  mutable std::mutex mu_;
  std::deque<Entry> entries_;
};

}  // namespace anpsi

#endif
