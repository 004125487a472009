#include "pnsup/marking.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pnsup {

namespace {

void check_dimensions(const Marking& a, const Marking& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("marking dimension mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

}  // namespace

bool Marking::is_zero() const {
  return std::all_of(counts_.begin(), counts_.end(), [](TokenCount c) { return c == 0; });
}

std::size_t Marking::marked_places() const {
  return static_cast<std::size_t>(
      std::count_if(counts_.begin(), counts_.end(), [](TokenCount c) { return c != 0; }));
}

std::uint64_t Marking::total_tokens() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

bool CanonicalLess::operator()(const Marking& a, const Marking& b) const {
  const std::size_t ma = a.marked_places(), mb = b.marked_places();
  if (ma != mb) return ma < mb;
  const std::uint64_t ta = a.total_tokens(), tb = b.total_tokens();
  if (ta != tb) return ta < tb;
  // Walk both supports in place order; the first differing marked place decides.
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t p = 0; p < n; ++p) {
    const bool in_a = a[p] != 0, in_b = b[p] != 0;
    if (in_a != in_b) return in_a;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (a[p] != b[p]) return a[p] < b[p];
  }
  return a.size() < b.size();
}

bool covers(const SubMarking& candidate, const Marking& state) {
  check_dimensions(candidate, state);
  for (std::size_t p = 0; p < state.size(); ++p) {
    if (candidate[p] > state[p]) return false;
  }
  return true;
}

bool is_overstate(const SubMarking& candidate, const Marking& state) {
  return covers(candidate, state) && candidate != state;
}

std::string support_word(const Marking& m, std::span<const std::string> place_names) {
  if (m.size() != place_names.size()) {
    throw std::invalid_argument("support_word: marking does not match place list");
  }
  std::string out;
  for (std::size_t p = 0; p < m.size(); ++p) {
    if (m[p] == 0) continue;
    if (!out.empty()) out += ' ';
    out += place_names[p];
    if (m[p] > 1) {
      out += '^';
      out += std::to_string(m[p]);
    }
  }
  return out;
}

Marking parse_support_word(std::string_view word, std::span<const std::string> place_names) {
  Marking m(place_names.size());
  std::istringstream in{std::string(word)};
  std::string item;
  while (in >> item) {
    TokenCount power = 1;
    std::string name = item;
    if (const auto caret = item.find('^'); caret != std::string::npos) {
      name = item.substr(0, caret);
      const char* first = item.data() + caret + 1;
      const char* last = item.data() + item.size();
      auto [ptr, ec] = std::from_chars(first, last, power);
      if (ec != std::errc{} || ptr != last || power == 0) {
        throw std::invalid_argument("bad power in support word item '" + item + "'");
      }
    }
    const auto it = std::find(place_names.begin(), place_names.end(), name);
    if (it == place_names.end()) {
      throw std::invalid_argument("unknown place '" + name + "' in support word");
    }
    m[static_cast<std::size_t>(it - place_names.begin())] += power;
  }
  return m;
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
  // FNV-1a over the counts.
  std::uint64_t h = 1469598103934665603ull;
  for (TokenCount c : m.counts()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pnsup
