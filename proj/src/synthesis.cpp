#include "pnsup/synthesis.hpp"

#include <sstream>

namespace pnsup {

std::optional<Method> parse_method(std::string_view name) {
  if (name == "forbid") return Method::kForbid;
  if (name == "enable") return Method::kEnable;
  if (name == "best") return Method::kBest;
  return std::nullopt;
}

Controller synthesize_controller(const PetriNet& net, const ReachabilityGraph& graph,
                                 const StateClassification& cls,
                                 const SynthesisOptions& options) {
  Controller controller;
  for (const TransitionId t : net.controllable_transitions()) {
    const auto critical = markings_of(graph, cls.critical_of.at(t));
    const auto sound = markings_of(graph, cls.sound_of.at(t));
    GuardProvenance prov;
    if (critical.empty()) {
      controller.guards.emplace(t, free_guard(t));
      controller.provenance.emplace(t, std::move(prov));
      continue;
    }

    std::optional<Guard> forbid, enable;
    if (options.method != Method::kEnable) {
      prov.forbidding = reduce_forbidding(critical, sound, options.reduction);
      if (!prov.forbidding->empty()) {
        forbid = guard_from_cover(t, *prov.forbidding->cover, Polarity::kForbid);
      }
    }
    // With no sound state the enabling form has nothing to permit.
    if (options.method != Method::kForbid && !sound.empty()) {
      prov.enabling = reduce_enabling(critical, sound, options.reduction);
      if (!prov.enabling->empty()) {
        enable = guard_from_cover(t, *prov.enabling->cover, Polarity::kEnable);
      }
    }
    prov.fallback = !forbid && !enable;
    controller.guards.emplace(t, choose_simpler(forbid, enable, guard_fallback(t, critical)));
    controller.provenance.emplace(t, std::move(prov));
  }
  return controller;
}

SynthesisResult synthesize(const PetriNet& net, const ForbiddenSpec& spec,
                           const SynthesisOptions& options) {
  ReachabilityGraph graph = build_graph(net, options.limits);
  StateClassification cls = classify(net, graph, spec);
  Controller controller = synthesize_controller(net, graph, cls, options);
  VerificationReport report = verify(net, graph, cls, controller);
  return SynthesisResult{std::move(graph), std::move(cls), std::move(controller),
                         std::move(report)};
}

std::string render_trace(const PetriNet& net, const ReachabilityGraph& graph,
                         const StateClassification& cls, const Controller& controller) {
  const auto& names = net.place_names();
  std::ostringstream out;
  const auto states = [&](const std::vector<StateId>& ids) {
    return support_set(markings_of(graph, ids), names);
  };
  const auto cover = [&](const Reduction& r) {
    return r.cover ? support_set(*r.cover, names) : std::string("EMPTY");
  };

  out << "border " << states(cls.border) << '\n';
  for (const TransitionId t : net.controllable_transitions()) {
    out << '\n' << "transition " << net.transition(t).name << '\n';
    out << "critical " << states(cls.critical_of.at(t)) << '\n';
    out << "sound " << states(cls.sound_of.at(t)) << '\n';
    if (const auto it = controller.provenance.find(t); it != controller.provenance.end()) {
      const GuardProvenance& prov = it->second;
      if (prov.forbidding) {
        const Reduction& r = *prov.forbidding;
        out << "C1 " << support_set(r.target_closure, names) << '\n';
        out << "S1 " << support_set(r.opposite_closure, names) << '\n';
        out << "C2 " << support_set(r.difference, names) << '\n';
        out << "C3 " << support_set(r.minimized, names) << '\n';
        out << "C4 " << cover(r) << '\n';
      }
      if (prov.enabling) {
        const Reduction& r = *prov.enabling;
        if (!prov.forbidding) {
          out << "C1 " << support_set(r.opposite_closure, names) << '\n';
          out << "S1 " << support_set(r.target_closure, names) << '\n';
        }
        out << "S2 " << support_set(r.difference, names) << '\n';
        out << "S3 " << support_set(r.minimized, names) << '\n';
        out << "S4 " << cover(r) << '\n';
      }
      if (prov.fallback) out << "fallback unreduced critical-state guard\n";
    }
    if (const auto g = controller.guards.find(t); g != controller.guards.end()) {
      out << "guard " << render_guard(net, g->second) << '\n';
    }
  }
  return out.str();
}

}  // namespace pnsup
