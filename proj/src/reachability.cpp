#include "pnsup/reachability.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pnsup/classification.hpp"
#include "pnsup/errors.hpp"

namespace pnsup {

std::optional<StateId> ReachabilityGraph::find(const Marking& m) const {
  const auto it = std::find(states_.begin(), states_.end(), m);
  if (it == states_.end()) return std::nullopt;
  return static_cast<StateId>(it - states_.begin());
}

std::optional<StateId> ReachabilityGraph::successor(StateId s, TransitionId t) const {
  for (const std::size_t e : out_.at(s)) {
    if (edges_[e].transition == t) return edges_[e].target;
  }
  return std::nullopt;
}

ReachabilityGraph build_graph(const PetriNet& net, const ExplorationLimits& limits) {
  ReachabilityGraph g;
  std::unordered_map<Marking, StateId, MarkingHash> index;

  auto check_bound = [&](const Marking& m) {
    for (std::size_t p = 0; p < m.size(); ++p) {
      if (m[p] > limits.max_tokens_per_place) {
        throw BoundExceeded("place " + net.place(p).name + " exceeds " +
                            std::to_string(limits.max_tokens_per_place) +
                            " tokens; the net is likely unbounded");
      }
    }
  };

  const Marking m0 = net.initial_marking();
  check_bound(m0);
  index.emplace(m0, 0);
  g.states_.push_back(m0);

  // states_ doubles as the BFS queue: ids are assigned in discovery order.
  for (StateId s = 0; s < g.states_.size(); ++s) {
    for (const TransitionId t : net.enabled(g.states_[s])) {
      Marking next = net.fire(g.states_[s], t);
      auto it = index.find(next);
      StateId target;
      if (it != index.end()) {
        target = it->second;
      } else {
        check_bound(next);
        if (g.states_.size() >= limits.max_states) {
          throw StateLimitExceeded("more than " + std::to_string(limits.max_states) +
                                   " reachable states");
        }
        target = g.states_.size();
        index.emplace(next, target);
        g.states_.push_back(std::move(next));
      }
      g.edges_.push_back({s, t, target});
    }
  }

  g.out_.assign(g.states_.size(), {});
  g.in_.assign(g.states_.size(), {});
  for (std::size_t e = 0; e < g.edges_.size(); ++e) {
    g.out_[g.edges_[e].source].push_back(e);
    g.in_[g.edges_[e].target].push_back(e);
  }
  for (StateId s = 0; s < g.states_.size(); ++s) {
    if (g.out_[s].empty()) g.deadlocks_.push_back(s);
  }
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const PetriNet& net, const ReachabilityGraph& graph,
                   const StateClassification* classification) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(net.name()) << "\" {\n";
  out << "  node [shape=ellipse];\n";
  for (StateId s = 0; s < graph.num_states(); ++s) {
    const std::string word = support_word(graph.state(s), net.place_names());
    out << "  s" << s << " [label=\"" << dot_escape(word.empty() ? "{}" : word) << '"';
    if (classification != nullptr && classification->is_forbidden(s)) {
      out << ", style=filled";
      if (classification->is_border(s)) out << ", peripheries=2";
    }
    out << "];\n";
  }
  for (const Edge& e : graph.edges()) {
    out << "  s" << e.source << " -> s" << e.target << " [label=\""
        << dot_escape(net.transition(e.transition).name) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pnsup
