#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pnsup/marking.hpp"

namespace pnsup {

using PlaceId = std::size_t;
using TransitionId = std::size_t;

struct Place {
  std::string name;
  TokenCount initial = 0;
  friend bool operator==(const Place&, const Place&) = default;
};

struct Transition {
  std::string name;
  bool controllable = false;
  std::string event;  // cosmetic label, may be empty
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// sum(coefficients[p] * m(p)) <= bound must hold in admissible states.
struct LinearConstraint {
  std::vector<std::int64_t> coefficients;
  std::int64_t bound = 0;

  bool satisfied_by(const Marking& m) const;
  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
};

struct ForbiddenSpec {
  std::vector<LinearConstraint> linear_constraints;
  std::vector<Marking> explicit_markings;
  bool forbid_deadlocks = false;

  bool empty() const {
    return linear_constraints.empty() && explicit_markings.empty() && !forbid_deadlocks;
  }
  /// True if m violates a constraint or is listed explicitly. Deadlocks are
  /// graph properties and are handled by classify().
  bool forbids(const Marking& m) const;
  friend bool operator==(const ForbiddenSpec&, const ForbiddenSpec&) = default;
};

/// Place/transition net with weighted arcs. Immutable after construction.
class PetriNet {
 public:
  /// pre[p][t]: weight of arc p -> t. post[t][p]: weight of arc t -> p.
  PetriNet(std::string name, std::vector<Place> places, std::vector<Transition> transitions,
           std::vector<std::vector<TokenCount>> pre, std::vector<std::vector<TokenCount>> post);

  const std::string& name() const { return name_; }
  std::size_t num_places() const { return places_.size(); }
  std::size_t num_transitions() const { return transitions_.size(); }
  const Place& place(PlaceId p) const { return places_.at(p); }
  const Transition& transition(TransitionId t) const { return transitions_.at(t); }
  const std::vector<Place>& places() const { return places_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<std::string>& place_names() const { return place_names_; }

  TokenCount pre(PlaceId p, TransitionId t) const { return pre_[p][t]; }
  TokenCount post(TransitionId t, PlaceId p) const { return post_[t][p]; }

  Marking initial_marking() const;

  std::optional<PlaceId> find_place(std::string_view name) const;
  std::optional<TransitionId> find_transition(std::string_view name) const;

  std::vector<TransitionId> controllable_transitions() const;

  bool is_enabled(const Marking& m, TransitionId t) const;
  /// Enabled transitions in declaration order.
  std::vector<TransitionId> enabled(const Marking& m) const;
  /// Throws std::logic_error if t is not enabled at m.
  Marking fire(const Marking& m, TransitionId t) const;
  /// Inverse token game: adds pre, subtracts post. Throws std::logic_error if
  /// some place would go negative.
  Marking unfire(const Marking& m, TransitionId t) const;

  friend bool operator==(const PetriNet&, const PetriNet&) = default;

 private:
  std::string name_;
  std::vector<Place> places_;
  std::vector<Transition> transitions_;
  std::vector<std::vector<TokenCount>> pre_;
  std::vector<std::vector<TokenCount>> post_;
  std::vector<std::string> place_names_;
};

struct NetDocument {
  PetriNet net;
  ForbiddenSpec spec;
};

/// Parses the line-oriented net description format. Throws ParseError.
NetDocument parse_net(std::string_view text);
NetDocument load_net(const std::string& path);

/// Canonical rendering; parse_net(render_net(d)) == d.
std::string render_net(const PetriNet& net, const ForbiddenSpec& spec);

}  // namespace pnsup
