#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pnsup/classification.hpp"
#include "pnsup/guard.hpp"
#include "pnsup/net.hpp"
#include "pnsup/overstate.hpp"
#include "pnsup/reachability.hpp"
#include "pnsup/verifier.hpp"

namespace pnsup {

enum class Method { kForbid, kEnable, kBest };

/// "forbid" | "enable" | "best"; nullopt otherwise.
std::optional<Method> parse_method(std::string_view name);

struct SynthesisOptions {
  Method method = Method::kBest;
  ExplorationLimits limits;
  ReductionOptions reduction;
};

/// One guard per controllable transition: FREE when it has no critical
/// state, otherwise the reduced forbidding and/or enabling guard (per
/// method), falling back to the unreduced forbidding guard.
Controller synthesize_controller(const PetriNet& net, const ReachabilityGraph& graph,
                                 const StateClassification& cls,
                                 const SynthesisOptions& options = {});

struct SynthesisResult {
  ReachabilityGraph graph;
  StateClassification classification;
  Controller controller;
  VerificationReport report;
};

/// Whole pipeline from net to verified controller.
SynthesisResult synthesize(const PetriNet& net, const ForbiddenSpec& spec,
                           const SynthesisOptions& options = {});

/// Stage-by-stage listing per controllable transition, C1..C4 and S1..S4
/// included.
std::string render_trace(const PetriNet& net, const ReachabilityGraph& graph,
                         const StateClassification& cls, const Controller& controller);

}  // namespace pnsup
