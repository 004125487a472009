#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pnsup/net.hpp"
#include "pnsup/reachability.hpp"

namespace pnsup {

/// Admissible/forbidden split of the reachable states plus the critical and
/// sound sets of each controllable transition. State lists are sorted.
struct StateClassification {
  std::vector<StateId> admissible;
  std::vector<StateId> forbidden;
  std::vector<StateId> border;
  std::map<TransitionId, std::vector<StateId>> critical_of;
  std::map<TransitionId, std::vector<StateId>> sound_of;
  std::vector<TransitionId> critical_transitions;

  std::vector<bool> forbidden_mask;
  std::vector<bool> border_mask;

  bool is_forbidden(StateId s) const { return forbidden_mask.at(s); }
  bool is_admissible(StateId s) const { return !forbidden_mask.at(s); }
  bool is_border(StateId s) const { return border_mask.at(s); }
};

/// Forbidden set = backward closure of the specification violations (and
/// deadlocks, if requested) under uncontrollable edges. Throws
/// NoSupervisorExists if the initial state is forbidden.
StateClassification classify(const PetriNet& net, const ReachabilityGraph& graph,
                             const ForbiddenSpec& spec);

/// (critical, sound) for a controllable transition t: admissible states whose
/// t-successor is forbidden, resp. admissible. Throws std::invalid_argument if
/// t is uncontrollable.
std::pair<std::vector<StateId>, std::vector<StateId>> critical_sound_sets(
    const PetriNet& net, const ReachabilityGraph& graph, const StateClassification& cls,
    TransitionId t);

/// Plain-text summary: set sizes, then critical/sound support words per
/// controllable transition.
std::string classification_report(const PetriNet& net, const ReachabilityGraph& graph,
                                   const StateClassification& cls);

std::vector<Marking> markings_of(const ReachabilityGraph& graph, const std::vector<StateId>& ids);

}  // namespace pnsup
