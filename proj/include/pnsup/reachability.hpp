#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pnsup/marking.hpp"
#include "pnsup/net.hpp"

namespace pnsup {

using StateId = std::size_t;

struct Edge {
  StateId source;
  TransitionId transition;
  StateId target;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ExplorationLimits {
  std::size_t max_states = 1'000'000;
  TokenCount max_tokens_per_place = 64;
};

/// Reachability graph numbered in breadth-first order from the initial
/// marking, with successors generated in transition declaration order.
class ReachabilityGraph {
 public:
  const std::vector<Marking>& states() const { return states_; }
  const Marking& state(StateId s) const { return states_.at(s); }
  std::size_t num_states() const { return states_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  StateId initial() const { return 0; }
  const std::vector<StateId>& deadlocks() const { return deadlocks_; }

  /// Indices into edges() of the edges leaving / entering s.
  const std::vector<std::size_t>& out_edges(StateId s) const { return out_.at(s); }
  const std::vector<std::size_t>& in_edges(StateId s) const { return in_.at(s); }

  std::optional<StateId> find(const Marking& m) const;
  /// Target of the t-labelled edge leaving s, if t is enabled there.
  std::optional<StateId> successor(StateId s, TransitionId t) const;

 private:
  friend ReachabilityGraph build_graph(const PetriNet&, const ExplorationLimits&);

  std::vector<Marking> states_;
  std::vector<Edge> edges_;
  std::vector<StateId> deadlocks_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// Throws StateLimitExceeded or BoundExceeded.
ReachabilityGraph build_graph(const PetriNet& net, const ExplorationLimits& limits = {});

struct StateClassification;

/// Graphviz rendering. With a classification, forbidden states are filled and
/// border states get a double outline.
std::string to_dot(const PetriNet& net, const ReachabilityGraph& graph,
                   const StateClassification* classification = nullptr);

}  // namespace pnsup
