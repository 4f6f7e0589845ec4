#include "protomc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "protomc/checker.hpp"
#include "protomc/compose.hpp"
#include "protomc/errors.hpp"
#include "protomc/io.hpp"
#include "protomc/state_model.hpp"

namespace protomc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << content;
  if (!file) throw Error("failed while writing " + path);
}

std::string marking_line(const StateModel& model, std::size_t state) {
  std::string line;
  for (const auto& p : model.marking_of(state).marked) {
    if (!line.empty()) line += " ";
    line += p.str();
  }
  return line;
}

void print_trace(std::ostream& out, const StateModel& model, const Trace& trace) {
  out << "  " << (trace.kind == Trace::Kind::Witness ? "witness" : "counterexample") << ":\n";
  for (std::size_t i = 0; i < trace.path.size(); ++i) {
    const TraceStep& step = trace.path[i];
    out << "    s" << step.state << ": " << marking_line(model, step.state) << "\n";
    if (step.fired) {
      out << "    -[" << *step.fired << "]->";
      if (i + 1 == trace.path.size() && trace.loop_back)
        out << " back to s" << trace.path[*trace.loop_back].state;
      out << "\n";
    }
  }
}

int do_compose(const std::vector<std::string>& net_paths, const std::string& sync_path,
               const std::string& out_path, std::ostream& out) {
  std::vector<PetriNet> nets;
  for (const auto& p : net_paths) nets.push_back(load_net(read_file(p)));
  const SyncSpec spec = load_sync(read_file(sync_path), nets);
  const Composition composition = compose(nets, spec);
  const std::string text = save_net(composition.net);
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
  return 0;
}

int do_reach(const std::string& net_path, std::size_t max_states, const std::string& dot_path,
             std::ostream& out) {
  const PetriNet net = load_net(read_file(net_path));
  const StateModel model = build_model(net, max_states);
  out << "states: " << model.num_states() << ", edges: " << model.num_edges()
      << ", deadlocks: " << deadlock_states(model).size() << "\n";
  if (!dot_path.empty()) write_file(dot_path, export_dot(model));
  return 0;
}

int do_check(const std::string& net_path, const std::string& props_path, bool witness,
             std::ostream& out) {
  const PetriNet net = load_net(read_file(net_path));
  const auto props = load_props(read_file(props_path));
  const StateModel model = build_model(net);
  bool all_hold = true;
  for (const auto& [name, formula] : props) {
    const CheckResult result = check(model, formula);
    out << name << ": " << (result.holds_at_initial ? "HOLDS" : "FAILS") << "\n";
    if (!result.holds_at_initial) all_hold = false;
    if (witness && result.trace) print_trace(out, model, *result.trace);
  }
  return all_hold ? 0 : 1;
}

int do_simulate(const std::string& net_path, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const PetriNet net = load_net(read_file(net_path));
  Marking marking = net.initial;
  for (;;) {
    std::string line;
    for (const auto& p : marking.marked) line += (line.empty() ? "" : " ") + p.str();
    out << "marking: " << line << "\n";
    const auto fireable = enabled(net, marking);
    std::string names;
    for (const auto& t : fireable) names += (names.empty() ? "" : " ") + t.str();
    out << "enabled: " << (names.empty() ? "(none)" : names) << "\n";
    out << "> " << std::flush;
    std::string input;
    if (!std::getline(in, input)) return 0;
    if (input == "quit") return 0;
    const TransitionId* chosen = nullptr;
    for (const auto& t : fireable) {
      if (t.str() == input) {
        chosen = &t;
        break;
      }
    }
    if (!chosen) {
      err << "'" << input << "' is not an enabled transition; enter one of the"
          << " listed names or 'quit'\n";
      continue;
    }
    marking = fire(net, marking, *chosen);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Petri-net composition and CTL checking for contractual protocols"};
  app.name("protomc");
  app.require_subcommand(1);

  std::vector<std::string> net_paths;
  std::string sync_path;
  std::string out_path;
  auto* compose_cmd =
      app.add_subcommand("compose", "Fuse component nets under an event synchronization");
  compose_cmd->add_option("--net", net_paths, "component net file (repeatable)")->required();
  compose_cmd->add_option("--sync", sync_path, "synchronization file")->required();
  compose_cmd->add_option("-o,--output", out_path, "output net file (default stdout)");

  std::string reach_net;
  std::string dot_path;
  std::size_t max_states = 1'000'000;
  auto* reach_cmd = app.add_subcommand("reach", "Build the reachable state model of a net");
  reach_cmd->add_option("net", reach_net, "net file")->required();
  reach_cmd->add_option("--dot", dot_path, "write the state model as Graphviz DOT");
  reach_cmd->add_option("--max-states", max_states, "state explosion cap");

  std::string check_net;
  std::string props_path;
  bool witness = false;
  auto* check_cmd = app.add_subcommand("check", "Check CTL properties at the initial state");
  check_cmd->add_option("net", check_net, "net file")->required();
  check_cmd->add_option("props", props_path, "property file")->required();
  check_cmd->add_flag("--witness", witness, "print witness/counterexample traces");

  std::string sim_net;
  auto* sim_cmd = app.add_subcommand("simulate", "Fire transitions interactively");
  sim_cmd->add_option("net", sim_net, "net file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (compose_cmd->parsed()) return do_compose(net_paths, sync_path, out_path, out);
    if (reach_cmd->parsed()) return do_reach(reach_net, max_states, dot_path, out);
    if (check_cmd->parsed()) return do_check(check_net, props_path, witness, out);
    if (sim_cmd->parsed()) return do_simulate(sim_net, in, out, err);
  } catch (const ExplosionError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace protomc
