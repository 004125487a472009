#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pnsup/classification.hpp"
#include "pnsup/guard.hpp"
#include "pnsup/net.hpp"
#include "pnsup/overstate.hpp"
#include "pnsup/reachability.hpp"

namespace pnsup {

using Firing = std::pair<StateId, TransitionId>;

struct VerificationReport {
  /// No forbidden state is reachable under control.
  bool safe = false;
  /// The controlled reachable set equals the admissible states reachable
  /// through admissible-only paths, and no sound firing is blocked.
  bool maximally_permissive = false;
  std::vector<Firing> blocked_sound_firings;
  std::vector<Firing> allowed_critical_firings;
  /// Reached admissible states where the plant enables something but the
  /// controller permits nothing.
  std::vector<StateId> induced_deadlocks;
  std::vector<StateId> closed_loop_states;
  std::vector<StateId> reference_states;

  bool ok() const { return safe && maximally_permissive; }
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Replays the plant under the controller from the initial state and
/// inspects every edge leaving a reached state.
VerificationReport verify(const PetriNet& net, const ReachabilityGraph& graph,
                          const StateClassification& cls, const Controller& controller);

/// Text report ending in `RESULT safe=<bool> maxperm=<bool>`.
std::string render_report(const PetriNet& net, const ReachabilityGraph& graph,
                          const VerificationReport& report);

/// Checks that the greedy cover and an exhaustive minimum cover for t both
/// block exactly criticalOf(t) among admissible states. Throws
/// SearchLimitExceeded when the minimized candidate set is too large.
bool cross_check_exact(const PetriNet& net, const ReachabilityGraph& graph,
                       const StateClassification& cls, TransitionId t,
                       const ReductionOptions& options = {});

}  // namespace pnsup
