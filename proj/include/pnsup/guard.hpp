#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pnsup/marking.hpp"
#include "pnsup/net.hpp"
#include "pnsup/overstate.hpp"

namespace pnsup {

/// Conjunction of m(P) >= k over the marked places of thresholds.
struct Term {
  SubMarking thresholds;

  bool satisfied_by(const Marking& m) const { return covers(thresholds, m); }
  friend bool operator==(const Term&, const Term&) = default;
};

enum class Polarity { kForbid, kEnable, kFree };

std::string_view polarity_name(Polarity p);

/// Control predicate for one controllable transition.
///   FORBID: fireable iff no term holds.
///   ENABLE: fireable iff some term holds.
///   FREE:   always fireable.
struct Guard {
  TransitionId transition = 0;
  Polarity polarity = Polarity::kFree;
  std::vector<Term> terms;

  /// Number of (place, threshold) literals across all terms.
  std::size_t literal_count() const;
  friend bool operator==(const Guard&, const Guard&) = default;
};

Guard free_guard(TransitionId t);

/// One term per cover element. cover must be nonempty and polarity must not
/// be FREE.
Guard guard_from_cover(TransitionId t, std::span<const SubMarking> cover, Polarity polarity);

/// Unreduced forbidding guard: one full-marking term per critical state.
Guard guard_fallback(TransitionId t, std::span<const Marking> critical);

/// Fewest literals wins; ties go to fewer terms and then to the forbidding
/// form. Without either reduction the fallback is returned.
Guard choose_simpler(const std::optional<Guard>& forbid, const std::optional<Guard>& enable,
                     const Guard& fallback);

/// True when the guard lets its transition fire at m.
bool evaluate(const Guard& guard, const Marking& m);

/// Per-transition record of how a guard was obtained.
struct GuardProvenance {
  std::optional<Reduction> forbidding;
  std::optional<Reduction> enabling;
  bool fallback = false;
};

struct Controller {
  std::map<TransitionId, Guard> guards;
  std::map<TransitionId, GuardProvenance> provenance;

  /// FREE when t has no guard.
  bool permits(TransitionId t, const Marking& m) const;
};

/// `t1 FORBID (P4>=2)` / `t1 ENABLE (P3>=1)|(P5>=1)` / `t3 FREE`, one line per
/// controllable transition in declaration order.
std::string render_guard(const PetriNet& net, const Guard& guard);
std::string render_guards(const PetriNet& net, const Controller& controller);

/// Controllable transitions without a line get a FREE guard. Throws
/// ParseError.
Controller parse_guards(std::string_view text, const PetriNet& net);
Controller load_guards(const std::string& path, const PetriNet& net);

}  // namespace pnsup
