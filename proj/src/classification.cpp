#include "pnsup/classification.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

#include "pnsup/errors.hpp"

namespace pnsup {

std::pair<std::vector<StateId>, std::vector<StateId>> critical_sound_sets(
    const PetriNet& net, const ReachabilityGraph& graph, const StateClassification& cls,
    TransitionId t) {
  if (!net.transition(t).controllable) {
    throw std::invalid_argument("transition " + net.transition(t).name + " is uncontrollable");
  }
  std::vector<StateId> critical, sound;
  for (const StateId s : cls.admissible) {
    const auto next = graph.successor(s, t);
    if (!next) continue;
    (cls.is_forbidden(*next) ? critical : sound).push_back(s);
  }
  return {std::move(critical), std::move(sound)};
}

StateClassification classify(const PetriNet& net, const ReachabilityGraph& graph,
                             const ForbiddenSpec& spec) {
  const std::size_t n = graph.num_states();
  StateClassification cls;
  cls.forbidden_mask.assign(n, false);
  cls.border_mask.assign(n, false);

  std::deque<StateId> work;
  for (StateId s = 0; s < n; ++s) {
    if (spec.forbids(graph.state(s))) {
      cls.forbidden_mask[s] = true;
      work.push_back(s);
    }
  }
  if (spec.forbid_deadlocks) {
    for (const StateId s : graph.deadlocks()) {
      if (!cls.forbidden_mask[s]) {
        cls.forbidden_mask[s] = true;
        work.push_back(s);
      }
    }
  }

  // Backward fixpoint along uncontrollable edges.
  while (!work.empty()) {
    const StateId s = work.front();
    work.pop_front();
    for (const std::size_t e : graph.in_edges(s)) {
      const Edge& edge = graph.edges()[e];
      if (net.transition(edge.transition).controllable) continue;
      if (!cls.forbidden_mask[edge.source]) {
        cls.forbidden_mask[edge.source] = true;
        work.push_back(edge.source);
      }
    }
  }

  if (cls.forbidden_mask[graph.initial()]) {
    throw NoSupervisorExists("initial state " +
                             support_word(graph.state(graph.initial()), net.place_names()) +
                             " is forbidden");
  }

  for (StateId s = 0; s < n; ++s) {
    (cls.forbidden_mask[s] ? cls.forbidden : cls.admissible).push_back(s);
  }
  for (const Edge& e : graph.edges()) {
    if (!cls.forbidden_mask[e.source] && cls.forbidden_mask[e.target]) {
      cls.border_mask[e.target] = true;
    }
  }
  for (StateId s = 0; s < n; ++s) {
    if (cls.border_mask[s]) cls.border.push_back(s);
  }

  for (const TransitionId t : net.controllable_transitions()) {
    auto [critical, sound] = critical_sound_sets(net, graph, cls, t);
    if (!critical.empty()) cls.critical_transitions.push_back(t);
    cls.critical_of[t] = std::move(critical);
    cls.sound_of[t] = std::move(sound);
  }
  return cls;
}

std::vector<Marking> markings_of(const ReachabilityGraph& graph, const std::vector<StateId>& ids) {
  std::vector<Marking> out;
  out.reserve(ids.size());
  for (const StateId s : ids) out.push_back(graph.state(s));
  return out;
}

std::string classification_report(const PetriNet& net, const ReachabilityGraph& graph,
                                  const StateClassification& cls) {
  std::ostringstream out;
  const auto& names = net.place_names();
  out << "admissible " << cls.admissible.size() << '\n';
  out << "forbidden " << cls.forbidden.size() << '\n';
  out << "border " << cls.border.size() << '\n';
  for (const StateId s : cls.border) out << "  border " << support_word(graph.state(s), names) << '\n';
  for (const auto& [t, critical] : cls.critical_of) {
    const std::string& tname = net.transition(t).name;
    for (const StateId s : critical) {
      out << tname << " critical " << support_word(graph.state(s), names) << '\n';
    }
    for (const StateId s : cls.sound_of.at(t)) {
      out << tname << " sound " << support_word(graph.state(s), names) << '\n';
    }
  }
  return out.str();
}

}  // namespace pnsup
