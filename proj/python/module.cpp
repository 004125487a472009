// Python bindings. Markings cross the boundary as lists of token counts and
// transitions are addressed by name.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pnsup/errors.hpp"
#include "pnsup/synthesis.hpp"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<pnsup::Marking> {
  PYBIND11_TYPE_CASTER(pnsup::Marking, const_name("list[int]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<pnsup::TokenCount>> inner;
    if (!inner.load(src, convert)) return false;
    value = pnsup::Marking(cast_op<std::vector<pnsup::TokenCount>&&>(std::move(inner)));
    return true;
  }

  static handle cast(const pnsup::Marking& m, return_value_policy, handle) {
    py::list out;
    for (const auto c : m.counts()) out.append(c);
    return out.release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace pnsup;

TransitionId transition_id(const PetriNet& net, const std::string& name) {
  const auto t = net.find_transition(name);
  if (!t) throw py::key_error("unknown transition '" + name + "'");
  return *t;
}

template <typename V>
py::dict by_transition_name(const PetriNet& net, const std::map<TransitionId, V>& values) {
  py::dict out;
  for (const auto& [t, v] : values) out[py::str(net.transition(t).name)] = v;
  return out;
}

// Transition-keyed maps are exposed by name, so the net travels with the
// classification.
struct PyClassification {
  StateClassification cls;
  PetriNet net;
};

std::vector<Marking> as_vector(const MarkingSet& s) { return {s.begin(), s.end()}; }

ReductionOptions reduction_options(std::size_t max_closure, bool exact) {
  return ReductionOptions{max_closure, exact ? CoverStrategy::kExact : CoverStrategy::kGreedy};
}

py::dict reduction_dict(const Reduction& r, bool enabling) {
  py::dict d;
  d[enabling ? "S1" : "C1"] = as_vector(r.target_closure);
  d[enabling ? "C1" : "S1"] = as_vector(r.opposite_closure);
  d[enabling ? "S2" : "C2"] = as_vector(r.difference);
  d[enabling ? "S3" : "C3"] = as_vector(r.minimized);
  d[enabling ? "S4" : "C4"] = r.cover ? py::cast(*r.cover) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_pnsup, m) {
  m.doc() = "Forbidden-state guard synthesis for bounded Petri nets";

  // Translators registered later are tried first, so the base goes first.
  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<LimitError>(m, "LimitError", error.ptr());
  py::register_exception<NoSupervisorExists>(m, "NoSupervisorExists", error.ptr());
  py::register_exception<InfeasibleCover>(m, "InfeasibleCover", error.ptr());

  py::class_<PetriNet>(m, "PetriNet")
      .def_property_readonly("name", &PetriNet::name)
      .def_property_readonly("places", &PetriNet::place_names)
      .def_property_readonly("transitions",
                             [](const PetriNet& net) {
                               std::vector<std::string> out;
                               for (TransitionId t = 0; t < net.num_transitions(); ++t) {
                                 out.push_back(net.transition(t).name);
                               }
                               return out;
                             })
      .def_property_readonly("controllable",
                             [](const PetriNet& net) {
                               std::vector<std::string> out;
                               for (const TransitionId t : net.controllable_transitions()) {
                                 out.push_back(net.transition(t).name);
                               }
                               return out;
                             })
      .def("initial_marking", &PetriNet::initial_marking)
      .def("enabled",
           [](const PetriNet& net, const Marking& mk) {
             std::vector<std::string> out;
             for (const TransitionId t : net.enabled(mk)) out.push_back(net.transition(t).name);
             return out;
           })
      .def("fire", [](const PetriNet& net, const Marking& mk,
                      const std::string& t) { return net.fire(mk, transition_id(net, t)); })
      .def("__eq__", [](const PetriNet& a, const PetriNet& b) { return a == b; });

  py::class_<ForbiddenSpec>(m, "ForbiddenSpec")
      .def_readonly("forbid_deadlocks", &ForbiddenSpec::forbid_deadlocks)
      .def_readonly("explicit_markings", &ForbiddenSpec::explicit_markings)
      .def("forbids", &ForbiddenSpec::forbids);

  py::class_<NetDocument>(m, "NetDocument")
      .def_readonly("net", &NetDocument::net)
      .def_readonly("spec", &NetDocument::spec);

  m.def("parse_net", &parse_net, py::arg("text"));
  m.def("load_net", &load_net, py::arg("path"));
  m.def("render_net", &render_net, py::arg("net"), py::arg("spec"));
  m.def("support_word",
        [](const Marking& mk, const PetriNet& net) { return support_word(mk, net.place_names()); },
        py::arg("marking"), py::arg("net"));
  m.def("parse_support_word",
        [](const std::string& w, const PetriNet& net) { return parse_support_word(w, net.place_names()); },
        py::arg("word"), py::arg("net"));

  py::class_<ReachabilityGraph>(m, "ReachabilityGraph")
      .def_property_readonly("states", &ReachabilityGraph::states)
      .def_property_readonly("num_states", &ReachabilityGraph::num_states)
      .def_property_readonly("deadlocks", &ReachabilityGraph::deadlocks)
      .def_property_readonly("edges", [](const ReachabilityGraph& g) {
        std::vector<std::tuple<StateId, TransitionId, StateId>> out;
        for (const Edge& e : g.edges()) out.emplace_back(e.source, e.transition, e.target);
        return out;
      });

  m.def(
      "build_graph",
      [](const PetriNet& net, std::size_t max_states, TokenCount max_tokens) {
        return build_graph(net, ExplorationLimits{max_states, max_tokens});
      },
      py::arg("net"), py::arg("max_states") = ExplorationLimits{}.max_states,
      py::arg("max_tokens") = ExplorationLimits{}.max_tokens_per_place);
  py::class_<PyClassification>(m, "StateClassification")
      .def_property_readonly("admissible", [](const PyClassification& c) { return c.cls.admissible; })
      .def_property_readonly("forbidden", [](const PyClassification& c) { return c.cls.forbidden; })
      .def_property_readonly("border", [](const PyClassification& c) { return c.cls.border; })
      .def_property_readonly("critical",
                             [](const PyClassification& c) { return by_transition_name(c.net, c.cls.critical_of); })
      .def_property_readonly("sound",
                             [](const PyClassification& c) { return by_transition_name(c.net, c.cls.sound_of); });

  m.def(
      "classify",
      [](const PetriNet& net, const ReachabilityGraph& g, const ForbiddenSpec& spec) {
        return PyClassification{classify(net, g, spec), net};
      },
      py::arg("net"), py::arg("graph"), py::arg("spec"));

  m.def(
      "to_dot",
      [](const PetriNet& net, const ReachabilityGraph& g, const PyClassification* c) {
        return to_dot(net, g, c ? &c->cls : nullptr);
      },
      py::arg("net"), py::arg("graph"), py::arg("classification") = nullptr);

  m.def(
      "closure",
      [](const std::vector<Marking>& states, std::size_t max_closure) {
        return as_vector(closure(states, max_closure));
      },
      py::arg("states"), py::arg("max_closure") = kDefaultClosureLimit);
  m.def(
      "reduce_forbidding",
      [](const std::vector<Marking>& critical, const std::vector<Marking>& sound,
         std::size_t max_closure, bool exact) {
        return reduction_dict(reduce_forbidding(critical, sound, reduction_options(max_closure, exact)),
                              false);
      },
      py::arg("critical"), py::arg("sound"), py::arg("max_closure") = kDefaultClosureLimit,
      py::arg("exact_cover") = false);
  m.def(
      "reduce_enabling",
      [](const std::vector<Marking>& critical, const std::vector<Marking>& sound,
         std::size_t max_closure, bool exact) {
        return reduction_dict(reduce_enabling(critical, sound, reduction_options(max_closure, exact)),
                              true);
      },
      py::arg("critical"), py::arg("sound"), py::arg("max_closure") = kDefaultClosureLimit,
      py::arg("exact_cover") = false);

  py::class_<VerificationReport>(m, "VerificationReport")
      .def_readonly("safe", &VerificationReport::safe)
      .def_readonly("maximally_permissive", &VerificationReport::maximally_permissive)
      .def_readonly("blocked_sound_firings", &VerificationReport::blocked_sound_firings)
      .def_readonly("allowed_critical_firings", &VerificationReport::allowed_critical_firings)
      .def_readonly("induced_deadlocks", &VerificationReport::induced_deadlocks)
      .def_readonly("closed_loop_states", &VerificationReport::closed_loop_states)
      .def_readonly("reference_states", &VerificationReport::reference_states)
      .def_property_readonly("ok", &VerificationReport::ok);

  py::class_<Controller>(m, "Controller")
      .def("permits", [](const Controller& c, const PetriNet& net, const std::string& t,
                         const Marking& mk) { return c.permits(transition_id(net, t), mk); });

  m.def("parse_guards", &parse_guards, py::arg("text"), py::arg("net"));
  m.def("render_guards", &render_guards, py::arg("net"), py::arg("controller"));
  m.def(
      "verify",
      [](const PetriNet& net, const ReachabilityGraph& g, const PyClassification& c,
         const Controller& controller) { return verify(net, g, c.cls, controller); },
      py::arg("net"), py::arg("graph"), py::arg("classification"), py::arg("controller"));
  m.def(
      "render_report",
      [](const PetriNet& net, const ReachabilityGraph& g, const VerificationReport& r) {
        return render_report(net, g, r);
      },
      py::arg("net"), py::arg("graph"), py::arg("report"));

  struct PySynthesis {
    SynthesisResult result;
    std::string guards;
    std::string trace;
  };
  py::class_<PySynthesis>(m, "SynthesisResult")
      .def_property_readonly("graph", [](const PySynthesis& s) { return s.result.graph; })
      .def_property_readonly("controller", [](const PySynthesis& s) { return s.result.controller; })
      .def_property_readonly("report", [](const PySynthesis& s) { return s.result.report; })
      .def_readonly("guards", &PySynthesis::guards)
      .def_readonly("trace", &PySynthesis::trace);

  m.def(
      "synthesize",
      [](const PetriNet& net, const ForbiddenSpec& spec, const std::string& method, bool exact_cover,
         std::size_t max_states, TokenCount max_tokens, std::size_t max_closure) {
        const auto parsed = parse_method(method);
        if (!parsed) throw py::value_error("method must be forbid, enable or best");
        SynthesisOptions opts;
        opts.method = *parsed;
        opts.limits = {max_states, max_tokens};
        opts.reduction = reduction_options(max_closure, exact_cover);
        SynthesisResult r = synthesize(net, spec, opts);
        std::string guards = render_guards(net, r.controller);
        std::string trace = render_trace(net, r.graph, r.classification, r.controller);
        return PySynthesis{std::move(r), std::move(guards), std::move(trace)};
      },
      py::arg("net"), py::arg("spec"), py::arg("method") = "best", py::arg("exact_cover") = false,
      py::arg("max_states") = ExplorationLimits{}.max_states,
      py::arg("max_tokens") = ExplorationLimits{}.max_tokens_per_place,
      py::arg("max_closure") = kDefaultClosureLimit);
}
