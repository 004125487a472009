// pnsup: guard synthesis for forbidden-state avoidance on bounded Petri nets.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pnsup/classification.hpp"
#include "pnsup/errors.hpp"
#include "pnsup/guard.hpp"
#include "pnsup/net.hpp"
#include "pnsup/reachability.hpp"
#include "pnsup/synthesis.hpp"
#include "pnsup/verifier.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kLimit = 3,
  kNoSupervisor = 4,
  kVerification = 5,
};

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

struct SynthArgs {
  std::string net_path;
  std::string method = "best";
  std::string out_path;
  std::string trace_path;
  bool exact_cover = false;
  std::size_t max_states = pnsup::ExplorationLimits{}.max_states;
  pnsup::TokenCount max_tokens = pnsup::ExplorationLimits{}.max_tokens_per_place;
  std::size_t max_closure = pnsup::kDefaultClosureLimit;
};

int cmd_synth(const SynthArgs& args) {
  const auto doc = pnsup::load_net(args.net_path);
  pnsup::SynthesisOptions options;
  options.method = *pnsup::parse_method(args.method);
  options.limits = {args.max_states, args.max_tokens};
  options.reduction.max_closure = args.max_closure;
  options.reduction.strategy =
      args.exact_cover ? pnsup::CoverStrategy::kExact : pnsup::CoverStrategy::kGreedy;

  const auto result = pnsup::synthesize(doc.net, doc.spec, options);
  const std::string guards = pnsup::render_guards(doc.net, result.controller);
  if (!args.out_path.empty()) write_text(args.out_path, guards);
  if (!args.trace_path.empty()) {
    write_text(args.trace_path, pnsup::render_trace(doc.net, result.graph, result.classification,
                                                    result.controller));
  }

  const auto& cls = result.classification;
  std::cout << "states " << result.graph.num_states() << " admissible " << cls.admissible.size()
            << " forbidden " << cls.forbidden.size() << " border " << cls.border.size() << '\n';
  std::cout << guards;
  for (const auto& [t, prov] : result.controller.provenance) {
    if (prov.fallback) {
      std::cout << "note: " << doc.net.transition(t).name
                << " uses the unreduced critical-state guard\n";
    }
  }
  std::cout << pnsup::render_report(doc.net, result.graph, result.report);
  return result.report.ok() ? kOk : kVerification;
}

int cmd_verify(const std::string& net_path, const std::string& guard_path) {
  const auto doc = pnsup::load_net(net_path);
  const auto controller = pnsup::load_guards(guard_path, doc.net);
  const auto graph = pnsup::build_graph(doc.net);
  const auto cls = pnsup::classify(doc.net, graph, doc.spec);
  const auto report = pnsup::verify(doc.net, graph, cls, controller);
  std::cout << pnsup::render_report(doc.net, graph, report);
  return report.ok() ? kOk : kVerification;
}

int cmd_graph(const std::string& net_path, const std::string& dot_path, bool with_classes) {
  const auto doc = pnsup::load_net(net_path);
  const auto graph = pnsup::build_graph(doc.net);
  if (with_classes) {
    const auto cls = pnsup::classify(doc.net, graph, doc.spec);
    write_text(dot_path, pnsup::to_dot(doc.net, graph, &cls));
  } else {
    write_text(dot_path, pnsup::to_dot(doc.net, graph));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden-state guard synthesis for bounded Petri nets"};
  app.require_subcommand(1);

  SynthArgs synth;
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize guards for controllable transitions");
  synth_cmd->add_option("net", synth.net_path, "Net description file")->required();
  synth_cmd->add_option("--method", synth.method, "forbid, enable or best")
      ->check(CLI::IsMember({"forbid", "enable", "best"}));
  synth_cmd->add_option("--out", synth.out_path, "Write the guard file here");
  synth_cmd->add_option("--trace", synth.trace_path, "Write per-stage reduction trace here");
  synth_cmd->add_flag("--exact-cover", synth.exact_cover,
                      "Exhaustive minimum cover instead of greedy selection");
  synth_cmd->add_option("--max-states", synth.max_states, "Reachable state limit")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--max-tokens", synth.max_tokens, "Per-place token bound")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--max-closure", synth.max_closure, "Over-state closure size limit")
      ->check(CLI::PositiveNumber);

  std::string verify_net, verify_guards;
  auto* verify_cmd = app.add_subcommand("verify", "Check a guard file against a net");
  verify_cmd->add_option("net", verify_net, "Net description file")->required();
  verify_cmd->add_option("guards", verify_guards, "Guard file")->required();

  std::string graph_net, graph_dot;
  bool graph_classify = false;
  auto* graph_cmd = app.add_subcommand("graph", "Export the reachability graph as DOT");
  graph_cmd->add_option("net", graph_net, "Net description file")->required();
  graph_cmd->add_option("--dot", graph_dot, "Output file ('-' for stdout)")->required();
  graph_cmd->add_flag("--classify", graph_classify, "Mark forbidden and border states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (synth_cmd->parsed()) return cmd_synth(synth);
    if (verify_cmd->parsed()) return cmd_verify(verify_net, verify_guards);
    if (graph_cmd->parsed()) return cmd_graph(graph_net, graph_dot, graph_classify);
  } catch (const pnsup::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const pnsup::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const pnsup::NoSupervisorExists& e) {
    std::cerr << "no supervisor exists: " << e.what() << '\n';
    return kNoSupervisor;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
