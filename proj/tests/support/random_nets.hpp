#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pnsup/errors.hpp"
#include "pnsup/net.hpp"
#include "pnsup/reachability.hpp"

namespace pnsup::testing {

struct RandomNetConfig {
  std::size_t max_places = 6;
  std::size_t max_transitions = 6;
  TokenCount max_initial = 3;
  TokenCount max_weight = 2;
};

/// Random net plus one random linear constraint. The net is not guaranteed
/// to be bounded; callers explore with tight limits and skip failures.
inline NetDocument random_net(std::mt19937_64& rng, const RandomNetConfig& cfg = {}) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  const std::size_t np = pick(2, cfg.max_places), nt = pick(2, cfg.max_transitions);
  std::vector<Place> places;
  for (std::size_t p = 0; p < np; ++p) {
    places.push_back({"P" + std::to_string(p + 1), static_cast<TokenCount>(pick(0, cfg.max_initial))});
  }
  if (std::all_of(places.begin(), places.end(), [](const Place& p) { return p.initial == 0; })) {
    places[pick(0, np - 1)].initial = 1;
  }

  std::vector<Transition> transitions;
  for (std::size_t t = 0; t < nt; ++t) {
    transitions.push_back({"t" + std::to_string(t + 1), pick(0, 1) == 0, ""});
  }
  std::vector<std::vector<TokenCount>> pre(np, std::vector<TokenCount>(nt, 0));
  std::vector<std::vector<TokenCount>> post(nt, std::vector<TokenCount>(np, 0));
  for (std::size_t t = 0; t < nt; ++t) {
    // Mostly token-moving transitions so that many nets stay bounded.
    const std::size_t ins = pick(1, std::min<std::size_t>(2, np));
    const std::size_t outs = pick(0, 3) == 0 ? pick(1, 2) : ins;
    for (std::size_t i = 0; i < ins; ++i) {
      pre[pick(0, np - 1)][t] = static_cast<TokenCount>(pick(1, cfg.max_weight));
    }
    for (std::size_t i = 0; i < outs; ++i) {
      post[t][pick(0, np - 1)] = static_cast<TokenCount>(pick(1, cfg.max_weight));
    }
  }

  ForbiddenSpec spec;
  // Bound between the initial weighted sum and the largest reachable one,
  // so m0 is admissible and the constraint usually bites. A few coefficient
  // draws are tried to find places whose weighted sum actually grows.
  PetriNet probe("probe", places, transitions, pre, post);
  std::optional<ReachabilityGraph> probe_graph;
  try {
    probe_graph = build_graph(probe, {5000, 3});
  } catch (const LimitError&) {
  }
  LinearConstraint c;
  std::int64_t initial_sum = 0, top = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    c = LinearConstraint{std::vector<std::int64_t>(np, 0), 0};
    for (std::size_t k = pick(1, 3); k > 0; --k) {
      c.coefficients[pick(0, np - 1)] = static_cast<std::int64_t>(pick(1, 2));
    }
    const auto weighted = [&](const Marking& m) {
      std::int64_t sum = 0;
      for (std::size_t p = 0; p < np; ++p) sum += c.coefficients[p] * m[p];
      return sum;
    };
    initial_sum = top = weighted(probe.initial_marking());
    if (!probe_graph) {
      top = initial_sum + 2;
      break;
    }
    for (const Marking& m : probe_graph->states()) top = std::max(top, weighted(m));
    if (top > initial_sum) break;
  }
  c.bound = initial_sum + static_cast<std::int64_t>(
                              pick(0, static_cast<std::size_t>(std::max<std::int64_t>(top - initial_sum - 1, 0))));
  spec.linear_constraints.push_back(std::move(c));
  if (pick(0, 4) == 0) spec.forbid_deadlocks = true;

  return NetDocument{PetriNet("random", std::move(places), std::move(transitions), std::move(pre),
                              std::move(post)),
                     std::move(spec)};
}

inline const ExplorationLimits kRandomLimits{5000, 3};

}  // namespace pnsup::testing
