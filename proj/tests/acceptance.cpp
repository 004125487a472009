// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.
//
// Pinned tolerances:
//   each fixture run finishes in under 1 s,
//   the randomized campaign runs until at least 100 bounded nets with a
//   nonempty forbidden set have been checked, in under 30 s,
//   the closure cardinality check samples 1000 random markings.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pnsup/errors.hpp"
#include "pnsup/synthesis.hpp"
#include "support/fixtures.hpp"
#include "support/random_nets.hpp"

namespace {

using namespace pnsup;
using testing::fixture;

constexpr double kFixtureSeconds = 1.0;
constexpr double kCampaignSeconds = 30.0;
constexpr int kCampaignNets = 100;
constexpr int kClosureSamples = 1000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failed sub-checks for one criterion.
class Criterion {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) failures_.push_back(what + ": got " + show(got) + ", want " + show(want));
  }
  bool report(int number, const std::string& title) const {
    std::printf("%s %d %s\n", failures_.empty() ? "PASS" : "FAIL", number, title.c_str());
    for (const auto& f : failures_) std::printf("    %s\n", f.c_str());
    return failures_.empty();
  }

 private:
  static std::string show(const std::string& s) { return "\"" + s + "\""; }
  template <typename T>
  static std::string show(const T& v) {
    std::ostringstream out;
    out << v;
    return out.str();
  }
  std::vector<std::string> failures_;
};

/// Sorted rendered set, so comparisons do not depend on enumeration order.
std::string set_of(const PetriNet& net, std::vector<Marking> ms) {
  std::sort(ms.begin(), ms.end(), CanonicalLess{});
  return support_set(ms, net.place_names());
}

std::string set_of(const PetriNet& net, const MarkingSet& ms) {
  return set_of(net, std::vector<Marking>(ms.begin(), ms.end()));
}

std::string words(const PetriNet& net, std::initializer_list<const char*> ws) {
  std::vector<Marking> ms;
  for (const char* w : ws) ms.push_back(testing::M(net, w));
  return set_of(net, ms);
}

struct FixtureRun {
  NetDocument doc;
  SynthesisResult result;
  double seconds;
};

FixtureRun run_fixture(const std::string& name, Method method) {
  const auto start = Clock::now();
  auto doc = fixture(name);
  SynthesisOptions opts;
  opts.method = method;
  auto result = synthesize(doc.net, doc.spec, opts);
  return FixtureRun{std::move(doc), std::move(result), seconds_since(start)};
}

bool criterion_safe_example() {
  Criterion c;
  try {
    const auto run = run_fixture("mb-safe", Method::kBest);
    const auto& net = run.doc.net;
    const auto& g = run.result.graph;
    const auto& cls = run.result.classification;
    const TransitionId t1 = *net.find_transition("t1");
    c.equal(set_of(net, markings_of(g, cls.border)), words(net, {"P2 P4 P5", "P2 P4 P6"}), "border");
    c.equal(set_of(net, markings_of(g, cls.critical_of.at(t1))), words(net, {"P1 P4 P5", "P1 P4 P6"}),
            "critical t1");
    c.equal(set_of(net, markings_of(g, cls.sound_of.at(t1))), words(net, {"P1 P3 P5"}), "sound t1");
    const auto& prov = run.result.controller.provenance.at(t1);
    if (prov.forbidding && prov.forbidding->cover) {
      c.equal(set_of(net, prov.forbidding->minimized), words(net, {"P4", "P6"}), "C3");
      c.equal(set_of(net, *prov.forbidding->cover), words(net, {"P4"}), "C4");
    } else {
      c.check(false, "forbidding reduction missing");
    }
    c.equal(render_guards(net, run.result.controller), std::string("t1 FORBID (P4>=1)\nt3 FREE\n"),
            "guards");
    c.check(run.seconds < kFixtureSeconds, "runtime " + std::to_string(run.seconds) + " s");
  } catch (const std::exception& e) {
    c.check(false, e.what());
  }
  return c.report(1, "safe example end-to-end");
}

bool criterion_non_safe_example() {
  Criterion c;
  try {
    const auto run = run_fixture("mb-2", Method::kBest);
    const auto& net = run.doc.net;
    const auto& g = run.result.graph;
    const auto& cls = run.result.classification;
    const TransitionId t1 = *net.find_transition("t1");
    c.equal(set_of(net, markings_of(g, cls.critical_of.at(t1))),
            words(net, {"P1 P4^2 P5", "P1 P4^2 P6"}), "critical t1");
    c.equal(set_of(net, markings_of(g, cls.sound_of.at(t1))),
            words(net, {"P1 P3^2 P5", "P1 P3 P4 P5", "P1 P3^2 P6", "P1 P3 P4 P6"}), "sound t1");
    const auto& prov = run.result.controller.provenance.at(t1);
    if (prov.forbidding && prov.forbidding->cover) {
      c.equal(set_of(net, prov.forbidding->difference),
              words(net, {"P4^2", "P1 P4^2", "P4^2 P5", "P1 P4^2 P5", "P4^2 P6", "P1 P4^2 P6"}), "C2");
      c.equal(set_of(net, prov.forbidding->minimized), words(net, {"P4^2"}), "C3");
      c.equal(set_of(net, *prov.forbidding->cover), words(net, {"P4^2"}), "C4");
    } else {
      c.check(false, "forbidding reduction missing");
    }
    c.equal(render_guard(net, run.result.controller.guards.at(t1)), std::string("t1 FORBID (P4>=2)"),
            "guard");
    c.check(run.seconds < kFixtureSeconds, "runtime " + std::to_string(run.seconds) + " s");
  } catch (const std::exception& e) {
    c.check(false, e.what());
  }
  return c.report(2, "non-safe example end-to-end");
}

bool criterion_dual_method() {
  Criterion c;
  try {
    const auto enable = run_fixture("mb-safe", Method::kEnable);
    const auto forbid = run_fixture("mb-safe", Method::kForbid);
    const auto& net = enable.doc.net;
    const TransitionId t1 = *net.find_transition("t1");
    const auto& prov = enable.result.controller.provenance.at(t1);
    if (prov.enabling) {
      c.equal(set_of(net, prov.enabling->difference), words(net, {"P3", "P3 P5", "P1 P3 P5"}), "S2");
    } else {
      c.check(false, "enabling reduction missing");
    }
    const Guard& ge = enable.result.controller.guards.at(t1);
    const Guard& gf = forbid.result.controller.guards.at(t1);
    c.equal(render_guard(net, ge), std::string("t1 ENABLE (P3>=1)"), "enable guard");
    c.equal(render_guard(net, gf), std::string("t1 FORBID (P4>=1)"), "forbid guard");
    for (const StateId s : enable.result.classification.admissible) {
      const Marking& m = enable.result.graph.state(s);
      c.check(evaluate(ge, m) == evaluate(gf, m),
              "polarities disagree at " + support_word(m, net.place_names()));
    }
  } catch (const std::exception& e) {
    c.check(false, e.what());
  }
  return c.report(3, "dual enabling method");
}

bool criterion_maximal_permissiveness() {
  Criterion c;
  for (const auto& [name, states] : {std::pair<const char*, std::size_t>{"mb-safe", 6}, {"mb-2", 10}}) {
    try {
      const auto run = run_fixture(name, Method::kBest);
      const auto& report = run.result.report;
      c.check(report.safe, std::string(name) + " safe");
      c.check(report.maximally_permissive, std::string(name) + " maximally permissive");
      c.equal(report.closed_loop_states.size(), states, std::string(name) + " closed-loop states");
    } catch (const std::exception& e) {
      c.check(false, std::string(name) + ": " + e.what());
    }
  }
  return c.report(4, "maximal permissiveness on fixtures");
}

bool criterion_random_campaign() {
  Criterion c;
  const auto start = Clock::now();
  std::mt19937_64 rng(20240501);
  int nets = 0, constrained = 0, guards = 0, cross_checked = 0;
  for (int attempt = 0; attempt < 20000 && constrained < kCampaignNets; ++attempt) {
    const auto doc = testing::random_net(rng);
    std::optional<ReachabilityGraph> graph;
    std::optional<StateClassification> cls;
    try {
      graph = build_graph(doc.net, testing::kRandomLimits);
      cls = classify(doc.net, *graph, doc.spec);
    } catch (const LimitError&) {
      continue;
    } catch (const NoSupervisorExists&) {
      continue;
    }
    SynthesisOptions opts;
    opts.limits = testing::kRandomLimits;
    Controller controller;
    try {
      controller = synthesize_controller(doc.net, *graph, *cls, opts);
    } catch (const LimitError&) {
      continue;
    }
    ++nets;
    if (!cls->forbidden.empty()) ++constrained;
    const std::string tag = "net #" + std::to_string(attempt);

    for (const Edge& e : graph->edges()) {
      if (!doc.net.transition(e.transition).controllable && cls->is_admissible(e.source)) {
        c.check(!cls->is_forbidden(e.target), tag + ": uncontrollable edge leaves admissible set");
      }
    }

    for (const TransitionId t : doc.net.controllable_transitions()) {
      if (controller.provenance.at(t).fallback) continue;
      ++guards;
      std::vector<StateId> blocked;
      for (const StateId s : cls->admissible) {
        if (graph->successor(s, t) && !controller.permits(t, graph->state(s))) blocked.push_back(s);
      }
      c.check(blocked == cls->critical_of.at(t), tag + ": guard for " + doc.net.transition(t).name +
                                                     " does not block exactly its critical states");
    }

    c.check(verify(doc.net, *graph, *cls, controller).safe, tag + ": verifier reports unsafe");

    for (const TransitionId t : cls->critical_transitions) {
      try {
        c.check(cross_check_exact(doc.net, *graph, *cls, t, opts.reduction),
                tag + ": greedy and exhaustive covers disagree");
        ++cross_checked;
      } catch (const SearchLimitExceeded&) {
      }
    }
  }
  const double secs = seconds_since(start);
  c.check(constrained >= kCampaignNets,
          "only " + std::to_string(constrained) + " bounded nets with forbidden states");
  c.check(secs < kCampaignSeconds, "runtime " + std::to_string(secs) + " s");
  std::printf("    (%d bounded nets, %d with forbidden states, %d reduced guards, %d exhaustive cross-checks, %.2f s)\n",
              nets, constrained, guards, cross_checked, secs);
  return c.report(5, "randomized property campaign");
}

bool criterion_algebraic_invariants() {
  Criterion c;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<TokenCount> count(0, 3);
  std::uniform_int_distribution<std::size_t> width(1, 5);
  for (int i = 0; i < kClosureSamples; ++i) {
    Marking m(width(rng));
    std::size_t expected = 1;
    for (std::size_t p = 0; p < m.size(); ++p) {
      m[p] = count(rng);
      expected *= m[p] + 1;
    }
    const auto got = closure(std::vector<Marking>{m}).size();
    c.check(got == expected - 1, "closure size " + std::to_string(got) + " for sample " + std::to_string(i));
  }

  // Exhaustive strict partial order over every vector in {0,1,2}^3.
  std::vector<Marking> all;
  for (TokenCount a = 0; a < 3; ++a)
    for (TokenCount b = 0; b < 3; ++b)
      for (TokenCount d = 0; d < 3; ++d) all.push_back(Marking{a, b, d});
  for (const auto& x : all) {
    c.check(!is_overstate(x, x), "over-state relation not irreflexive");
    for (const auto& y : all) {
      if (is_overstate(x, y)) c.check(!is_overstate(y, x), "over-state relation not asymmetric");
      for (const auto& z : all) {
        if (is_overstate(x, y) && is_overstate(y, z)) {
          c.check(is_overstate(x, z), "over-state relation not transitive");
        }
      }
    }
  }

  for (const char* name : {"mb-safe", "mb-2"}) {
    const std::string text = testing::read_file(testing::fixture_path(std::string(name) + ".net"));
    const auto doc = parse_net(text);
    c.check(render_net(doc.net, doc.spec) == text, std::string(name) + " net file round trip");
    const auto result = synthesize(doc.net, doc.spec);
    const std::string guards = render_guards(doc.net, result.controller);
    c.check(render_guards(doc.net, parse_guards(guards, doc.net)) == guards,
            std::string(name) + " guard file round trip");
  }
  std::mt19937_64 net_rng(11);
  for (int i = 0; i < 200; ++i) {
    const auto doc = testing::random_net(net_rng);
    const std::string text = render_net(doc.net, doc.spec);
    const auto back = parse_net(text);
    c.check(render_net(back.net, back.spec) == text, "random net round trip");
  }
  return c.report(6, "algebraic invariants and round trips");
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria = {
      criterion_safe_example,       criterion_non_safe_example, criterion_dual_method,
      criterion_maximal_permissiveness, criterion_random_campaign, criterion_algebraic_invariants};
  int failed = 0;
  for (const auto& run : criteria) failed += run() ? 0 : 1;
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
