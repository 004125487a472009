#include "pnsup/verifier.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace pnsup {

namespace {

/// States reached from the initial state following edges accepted by allow.
template <typename Allow>
std::vector<bool> explore(const ReachabilityGraph& graph, Allow allow) {
  std::vector<bool> seen(graph.num_states(), false);
  std::deque<StateId> work{graph.initial()};
  seen[graph.initial()] = true;
  while (!work.empty()) {
    const StateId s = work.front();
    work.pop_front();
    for (const std::size_t e : graph.out_edges(s)) {
      const Edge& edge = graph.edges()[e];
      if (!allow(edge) || seen[edge.target]) continue;
      seen[edge.target] = true;
      work.push_back(edge.target);
    }
  }
  return seen;
}

std::vector<StateId> ids_of(const std::vector<bool>& mask) {
  std::vector<StateId> out;
  for (StateId s = 0; s < mask.size(); ++s) {
    if (mask[s]) out.push_back(s);
  }
  return out;
}

}  // namespace

VerificationReport verify(const PetriNet& net, const ReachabilityGraph& graph,
                          const StateClassification& cls, const Controller& controller) {
  const auto permitted = [&](const Edge& e) {
    return !net.transition(e.transition).controllable ||
           controller.permits(e.transition, graph.state(e.source));
  };
  const std::vector<bool> reached = explore(graph, permitted);
  const std::vector<bool> reference =
      explore(graph, [&](const Edge& e) { return cls.is_admissible(e.target); });

  VerificationReport report;
  report.closed_loop_states = ids_of(reached);
  report.reference_states = ids_of(reference);

  bool forbidden_reached = false;
  for (const StateId s : report.closed_loop_states) {
    if (cls.is_forbidden(s)) {
      forbidden_reached = true;
      continue;
    }
    bool any_enabled = false, any_permitted = false;
    for (const std::size_t e : graph.out_edges(s)) {
      const Edge& edge = graph.edges()[e];
      any_enabled = true;
      const bool allowed = permitted(edge);
      any_permitted = any_permitted || allowed;
      if (!net.transition(edge.transition).controllable) continue;
      if (cls.is_forbidden(edge.target) && allowed) {
        report.allowed_critical_firings.emplace_back(s, edge.transition);
      } else if (cls.is_admissible(edge.target) && !allowed) {
        report.blocked_sound_firings.emplace_back(s, edge.transition);
      }
    }
    if (any_enabled && !any_permitted) report.induced_deadlocks.push_back(s);
  }

  report.safe = !forbidden_reached && report.allowed_critical_firings.empty();
  report.maximally_permissive =
      reached == reference && report.blocked_sound_firings.empty();
  return report;
}

std::string render_report(const PetriNet& net, const ReachabilityGraph& graph,
                          const VerificationReport& report) {
  const auto& names = net.place_names();
  const auto word = [&](StateId s) {
    const std::string w = support_word(graph.state(s), names);
    return w.empty() ? std::string("{}") : w;
  };
  std::ostringstream out;
  out << "closed-loop states " << report.closed_loop_states.size() << '\n';
  out << "reference states " << report.reference_states.size() << '\n';
  for (const auto& [s, t] : report.allowed_critical_firings) {
    out << "allowed critical firing " << net.transition(t).name << " at " << word(s) << '\n';
  }
  for (const auto& [s, t] : report.blocked_sound_firings) {
    out << "blocked sound firing " << net.transition(t).name << " at " << word(s) << '\n';
  }
  for (const StateId s : report.induced_deadlocks) {
    out << "warning: control-induced deadlock at " << word(s) << '\n';
  }
  out << "RESULT safe=" << (report.safe ? "true" : "false")
      << " maxperm=" << (report.maximally_permissive ? "true" : "false") << '\n';
  return out.str();
}

bool cross_check_exact(const PetriNet& net, const ReachabilityGraph& graph,
                       const StateClassification& cls, TransitionId t,
                       const ReductionOptions& options) {
  if (!net.transition(t).controllable) {
    throw std::invalid_argument("transition " + net.transition(t).name + " is uncontrollable");
  }
  const auto& critical_ids = cls.critical_of.at(t);
  if (critical_ids.empty()) throw std::invalid_argument("transition has no critical states");
  const auto critical = markings_of(graph, critical_ids);
  const auto sound = markings_of(graph, cls.sound_of.at(t));

  ReductionOptions greedy_opts = options;
  greedy_opts.strategy = CoverStrategy::kGreedy;
  const Reduction greedy = reduce_forbidding(critical, sound, greedy_opts);
  if (greedy.empty()) {
    // No candidate set exists for either search; both fall back identically.
    return true;
  }
  const CoverChart chart = CoverChart::build(
      std::vector<SubMarking>(greedy.minimized.begin(), greedy.minimized.end()), critical);
  const std::vector<SubMarking> optimum = exact_cover(chart);

  const auto blocked_by = [&](const std::vector<SubMarking>& cover) {
    const Guard g = guard_from_cover(t, cover, Polarity::kForbid);
    std::vector<StateId> blocked;
    for (const StateId s : cls.admissible) {
      if (graph.successor(s, t) && !evaluate(g, graph.state(s))) blocked.push_back(s);
    }
    return blocked;
  };
  const auto greedy_blocked = blocked_by(*greedy.cover);
  return greedy_blocked == blocked_by(optimum) && greedy_blocked == critical_ids;
}

}  // namespace pnsup
