#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace pnsup {

using TokenCount = std::uint32_t;

/// Token count per place. The same shape is used for reachable states and
/// for over-states, where each entry is read as a lower-bound threshold.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t num_places) : counts_(num_places, 0) {}
  explicit Marking(std::vector<TokenCount> counts) : counts_(std::move(counts)) {}
  Marking(std::initializer_list<TokenCount> counts) : counts_(counts) {}

  std::size_t size() const { return counts_.size(); }
  TokenCount operator[](std::size_t place) const { return counts_[place]; }
  TokenCount& operator[](std::size_t place) { return counts_[place]; }
  std::span<const TokenCount> counts() const { return counts_; }

  bool is_zero() const;
  /// Number of places holding at least one token.
  std::size_t marked_places() const;
  std::uint64_t total_tokens() const;

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking&, const Marking&) = default;

 private:
  std::vector<TokenCount> counts_;
};

/// An over-state is a marking read as per-place thresholds.
using SubMarking = Marking;

/// Presentation and tie-break order: fewer marked places first, then fewer
/// tokens, then the marked places compared in declaration order.
struct CanonicalLess {
  bool operator()(const Marking& a, const Marking& b) const;
};

/// Ordered set of sub-markings, iterated in canonical order.
using MarkingSet = std::set<Marking, CanonicalLess>;

/// candidate <= state componentwise (state itself included).
bool covers(const SubMarking& candidate, const Marking& state);

/// candidate <= state componentwise and strictly smaller somewhere.
bool is_overstate(const SubMarking& candidate, const Marking& state);

/// Renders the support as a place-power word, e.g. "P1 P3^2 P6". The all-zero
/// marking renders as the empty string.
std::string support_word(const Marking& m, std::span<const std::string> place_names);

/// Inverse of support_word. Throws std::invalid_argument on unknown places.
Marking parse_support_word(std::string_view word, std::span<const std::string> place_names);

/// "{P4, P1 P4}" in the iteration order of the range.
template <typename Range>
std::string support_set(const Range& markings, std::span<const std::string> place_names) {
  std::string out = "{";
  bool first = true;
  for (const Marking& m : markings) {
    if (!first) out += ", ";
    first = false;
    out += support_word(m, place_names);
  }
  out += "}";
  return out;
}

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept;
};

}  // namespace pnsup
