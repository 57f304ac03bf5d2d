// Copyright 2026 The structctl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "structctl/centralized.h"
#include "structctl/distributed.h"
#include "structctl/errors.h"
#include "structctl/generator.h"
#include "structctl/graphs.h"
#include "structctl/io.h"
#include "structctl/serial.h"
#include "structctl/similar.h"

namespace structctl::cli {
namespace {

using nlohmann::json;

struct VerifyConfig {
  std::string mode = "centralized";
  std::string input;
  std::uint64_t seed = 1;
  std::string trace_path;
  std::string prd_state_path;
  bool fig5_simplify = false;
  bool require_connected = false;
  std::string serial_variant = "incoming";
};

struct GenConfig {
  int r = 4;
  std::string n_range = "1-8";
  std::string p_range = "1";
  double density = 0.25;
  double b_density = 0.2;
  double e_density = 0.2;
  bool serial = false;
  bool similar = false;
  bool general = false;
  std::uint64_t seed = 1;
  std::string out;
};

struct TraceConfig {
  std::string input;
  std::optional<int> round;
  std::optional<int> agent;
};

std::pair<int, int> ParseRange(const std::string& text, const char* flag) {
  const auto dash = text.find_first_of("-:");
  try {
    std::size_t used = 0;
    if (dash == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const int lo = std::stoi(text.substr(0, dash), &used);
    if (used != dash) throw std::invalid_argument(text);
    const std::string rest = text.substr(dash + 1);
    const int hi = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ValidationError(std::string(flag) + ": expected <int> or <lo>-<hi>, got '" +
                          text + "'");
  }
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, "cannot open for writing");
  file << text;
  if (!file) throw ParseError(path, "write failed");
}

json StatsJson(const runtime::RunStats& s) {
  return {{"rounds", s.rounds},
          {"messages", s.messages},
          {"payload_items", s.payload_items},
          {"max_payload_items", s.max_payload_items}};
}

void WriteTraces(const VerifyConfig& config, const runtime::Trace& trace) {
  if (!config.trace_path.empty()) {
    WriteText(config.trace_path, trace.MessagesJsonl() + trace.SnapshotsJsonl());
  }
  if (!config.prd_state_path.empty()) {
    runtime::Trace prd;
    for (const runtime::Snapshot& s : trace.snapshots) {
      if (s.tag == "prd") prd.snapshots.push_back(s);
    }
    WriteText(config.prd_state_path, prd.SnapshotsJsonl());
  }
}

std::vector<std::string> Names(const std::vector<VertexTag>& tags,
                               const std::vector<int>& vertices) {
  std::vector<std::string> names;
  for (int v : vertices) names.push_back(VertexName(tags[v]));
  return names;
}

// Failure evidence from the centralized characterization, in vertex names.
json Witness(const InterconnectedSystem& sys,
             const centralized::Verdict& verdict) {
  json w = json::object();
  if (!verdict.violation) return w;
  const std::vector<VertexTag> tags = GlobalVertexTags(sys);
  const centralized::Violation& v = *verdict.violation;
  if (!v.unreached.empty()) {
    w["unreached"] = Names(tags, v.unreached);
  } else {
    w["deficient"] = Names(tags, v.deficient);
    w["deficient_neighbors"] = Names(tags, v.deficient_neighbors);
  }
  return w;
}

json Certificate(const InterconnectedSystem& sys,
                 const centralized::Verdict& verdict) {
  const std::vector<VertexTag> tags = GlobalVertexTags(sys);
  json matching = json::array();
  for (const graph::BipartiteEdge& e : verdict.matching.Edges()) {
    matching.push_back({VertexName(tags[e.first]), VertexName(tags[e.second])});
  }
  json parents = json::object();
  for (int x = 0; x < sys.total_states(); ++x) {
    const int p = verdict.reach_parent[x];
    if (p >= 0) parents[VertexName(tags[x])] = VertexName(tags[p]);
  }
  return {{"matching", matching}, {"reach_parent", parents}};
}

struct Loaded {
  InterconnectedSystem sys;
  std::optional<similar::SimilarSystemSpec> spec;
};

Loaded Load(const std::string& path) {
  const json doc = ReadJsonFile(path);
  if (doc.is_object() && doc.contains("similar")) {
    similar::SimilarSystemSpec spec = similar::SpecFromJson(doc);
    InterconnectedSystem sys = similar::Expand(spec);
    return {std::move(sys), std::move(spec)};
  }
  return {SystemFromJson(doc), std::nullopt};
}

int Finish(json report, bool yes, std::ostream& out, std::ostream& err,
           const std::string& summary) {
  out << report.dump(2) << "\n";
  err << summary << "\n";
  return yes ? kExitYes : kExitNo;
}

int VerifyCentralized(const VerifyConfig& config, const Loaded& in,
                      std::ostream& out, std::ostream& err) {
  const GlobalPattern g = AssembleGlobal(in.sys);
  const centralized::Verdict verdict = centralized::Verify(g.A, g.B);
  json report = {{"mode", config.mode},
                 {"controllable", verdict.controllable},
                 {"criterion", centralized::CriterionName(verdict.criterion)},
                 {"states", in.sys.total_states()},
                 {"inputs", in.sys.total_inputs()}};
  if (verdict.controllable) {
    report["certificate"] = Certificate(in.sys, verdict);
  } else {
    report["witness"] = Witness(in.sys, verdict);
  }
  const centralized::ProbeOptions probe;
  if (in.sys.total_states() <= probe.max_states) {
    report["numeric_probe"] = {
        {"seed", config.seed},
        {"full_rank", centralized::NumericProbe(g.A, g.B, config.seed)}};
  }
  return Finish(report, verdict.controllable, out, err,
                std::string("structurally controllable: ") +
                    (verdict.controllable ? "yes" : "no") + " (centralized, " +
                    std::to_string(in.sys.total_states()) + " states)");
}

int VerifyDistributed(const VerifyConfig& config, const Loaded& in,
                      std::ostream& out, std::ostream& err) {
  distributed::ControlledOptions options;
  options.fig5_simplify = config.fig5_simplify;
  const auto run = distributed::RunControlled(in.sys, options);
  WriteTraces(config, run.trace);

  const bool verdict = run.outputs.front().verdict;
  json agents = json::array();
  int iterations = 0;
  int t_inflow = 0;
  for (std::size_t i = 0; i < run.outputs.size(); ++i) {
    const distributed::ControlledResult& o = run.outputs[i];
    iterations = std::max(iterations, o.reach.last_growth);
    t_inflow += o.prd.t_inflow;
    agents.push_back({{"id", i},
                      {"rchd", o.reach.reached},
                      {"mchd", o.matched},
                      {"ctld", o.verdict},
                      {"reached_states", o.reach.rchd},
                      {"t_inflow", o.prd.t_inflow},
                      {"color", o.prd.color}});
  }
  const distributed::PrdResult& prd = run.outputs.front().prd;
  const int beta = distributed::BoundaryVertexCount(in.sys, config.fig5_simplify);
  json report = {
      {"mode", config.mode},
      {"controllable", verdict},
      {"fig5_simplify", config.fig5_simplify},
      {"agents", agents},
      {"reachability",
       {{"total_scc_count", run.outputs.front().reach.total_scc_count},
        {"iterations", iterations}}},
      {"prd",
       {{"sweeps", prd.sweeps},
        {"colors", prd.num_colors},
        {"beta", beta},
        {"within_beta_squared", prd.sweeps <= beta * beta},
        {"t_inflow", t_inflow}}},
      {"stats", StatsJson(run.stats)}};
  if (!verdict) {
    const GlobalPattern g = AssembleGlobal(in.sys);
    report["witness"] = Witness(in.sys, centralized::Verify(g.A, g.B));
  }
  return Finish(report, verdict, out, err,
                std::string("structurally controllable: ") +
                    (verdict ? "yes" : "no") + " (distributed, " +
                    std::to_string(run.outputs.size()) + " agents, " +
                    std::to_string(run.stats.rounds) + " rounds, " +
                    std::to_string(iterations) + " reachability iterations, " +
                    std::to_string(prd.sweeps) + " discharge sweeps)");
}

int VerifySerial(const VerifyConfig& config, const Loaded& in,
                 std::ostream& out, std::ostream& err) {
  serial::Variant variant;
  if (config.serial_variant == "incoming") {
    variant = serial::Variant::kIncoming;
  } else if (config.serial_variant == "outgoing") {
    variant = serial::Variant::kOutgoing;
  } else {
    throw ValidationError("--serial-variant must be incoming or outgoing");
  }
  const auto run = serial::RunSeqStrtCtl(in.sys, variant);
  WriteTraces(config, run.trace);
  const bool verdict = run.outputs.front().verdict;
  json agents = json::array();
  for (std::size_t i = 0; i < run.outputs.size(); ++i) {
    const serial::SerialAgentResult& o = run.outputs[i];
    agents.push_back({{"id", i},
                      {"rchd", o.reached},
                      {"mchd", o.matched},
                      {"ctld", o.verdict}});
  }
  json report = {{"mode", config.mode},
                 {"variant", config.serial_variant},
                 {"sufficient_condition_holds", verdict},
                 {"agents", agents},
                 {"stats", StatsJson(run.stats)}};
  if (!verdict) {
    const GlobalPattern g = AssembleGlobal(in.sys);
    report["witness"] = Witness(in.sys, centralized::Verify(g.A, g.B));
  }
  return Finish(report, verdict, out, err,
                std::string("sufficient condition: ") +
                    (verdict ? "holds" : "fails") + " (serial, " +
                    std::to_string(run.outputs.size()) + " agents)");
}

int VerifySimilar(const VerifyConfig& config, const Loaded& in,
                  std::ostream& out, std::ostream& err) {
  if (!in.spec) {
    throw PreconditionError("mode " + config.mode +
                            " needs a similar-system file ({\"similar\": ...})");
  }
  const bool thm1 = config.mode == "similar-thm1";
  json report = {{"mode", config.mode}};
  if (in.spec->Bprime.nnz() == 0) {
    // No input edges at all: nothing is reached, whatever the theorem says.
    const GlobalPattern g = AssembleGlobal(in.sys);
    report["status"] = similar::StatusName(similar::Status::kFails);
    report["witness"] = Witness(in.sys, centralized::Verify(g.A, g.B));
    return Finish(report, false, out, err,
                  "condition fails: the template has no input edges");
  }
  const similar::TheoremReport result = thm1
                                            ? similar::CheckTheorem1(*in.spec)
                                            : similar::CheckTheorem2(*in.spec);
  report["status"] = similar::StatusName(result.status);
  if (result.status == similar::Status::kPreconditionUnmet) {
    report["precondition"] = result.precondition;
    out << report.dump(2) << "\n";
    err << "precondition unmet: " << result.precondition << "\n";
    return kExitError;
  }
  report["merged_controllable"] = result.merged_controllable;
  report["topology_condition"] = result.topology_condition;
  const bool holds = result.status == similar::Status::kHolds;
  if (!holds) {
    const GlobalPattern g = AssembleGlobal(in.sys);
    const centralized::Verdict verdict = centralized::Verify(g.A, g.B);
    if (!verdict.controllable) report["witness"] = Witness(in.sys, verdict);
  }
  return Finish(report, holds, out, err,
                std::string(thm1 ? "exact test: " : "sufficient test: ") +
                    (holds ? "holds" : "fails") + " (" + config.mode + ")");
}

int CmdVerify(const VerifyConfig& config, std::ostream& out,
              std::ostream& err) {
  const Loaded in = Load(config.input);
  if (config.require_connected) RequireWeaklyConnected(in.sys);
  if (config.mode == "centralized") return VerifyCentralized(config, in, out, err);
  if (config.mode == "distributed") return VerifyDistributed(config, in, out, err);
  if (config.mode == "serial") return VerifySerial(config, in, out, err);
  return VerifySimilar(config, in, out, err);
}

int CmdGen(const GenConfig& config, std::ostream& err) {
  const int kinds = config.serial + config.similar + config.general;
  if (kinds > 1) {
    throw ValidationError("choose one of --serial, --similar, --general");
  }
  const auto [n_lo, n_hi] = ParseRange(config.n_range, "--n");
  const auto [p_lo, p_hi] = ParseRange(config.p_range, "--p");
  json doc;
  if (config.similar) {
    similar::SpecParams params;
    params.r_min = params.r_max = config.r;
    params.n_min = n_lo;
    params.n_max = n_hi;
    params.p_min = p_lo;
    params.p_max = p_hi;
    params.a_density = config.density;
    params.h_density = config.density;
    params.b_density = config.b_density;
    params.e_density = config.e_density;
    doc = similar::SpecToJson(similar::RandomSpec(params, config.seed));
  } else {
    GeneratorParams params;
    params.r = config.r;
    params.n_min = n_lo;
    params.n_max = n_hi;
    params.p_min = p_lo;
    params.p_max = p_hi;
    params.a_density = config.density;
    params.b_density = config.b_density;
    params.e_density = config.e_density;
    params.topology = config.serial ? Topology::kSerial : Topology::kGeneral;
    doc = SystemToJson(RandomSystem(params, config.seed));
  }
  WriteJsonFile(doc, config.out);
  err << "wrote " << config.out << "\n";
  return kExitYes;
}

std::string FormatLine(const json& line) {
  std::ostringstream os;
  os << "round " << line.at("round").get<int>() << "  ";
  if (line.contains("from")) {
    const json& payload = line.at("payload");
    os << line.at("from").get<int>() << " -> " << line.at("to").get<int>()
       << "  " << payload.at("type").get<std::string>() << " ";
    json body = payload;
    body.erase("type");
    os << body.dump();
  } else {
    os << "agent " << line.at("agent").get<int>() << "  "
       << line.at("tag").get<std::string>() << " "
       << line.at("state").dump();
  }
  return os.str();
}

int CmdTrace(const TraceConfig& config, std::ostream& out) {
  std::ifstream file(config.input);
  if (!file) throw ParseError(config.input, "cannot open trace");
  std::string text;
  int line_no = 0;
  while (std::getline(file, text)) {
    ++line_no;
    if (text.empty()) continue;
    const std::string where = config.input + ":" + std::to_string(line_no);
    json line;
    try {
      line = json::parse(text);
      const bool message = line.contains("from");
      if (!line.is_object() || !line.contains("round") ||
          (message ? !line.contains("to") || !line.contains("payload")
                   : !line.contains("agent") || !line.contains("tag") ||
                         !line.contains("state"))) {
        throw ParseError(where, "not a trace record");
      }
      if (config.round && line.at("round").get<int>() != *config.round) continue;
      if (config.agent) {
        const bool hit =
            message ? line.at("from").get<int>() == *config.agent ||
                          line.at("to").get<int>() == *config.agent
                    : line.at("agent").get<int>() == *config.agent;
        if (!hit) continue;
      }
      out << FormatLine(line) << "\n";
    } catch (const json::exception& e) {
      throw ParseError(where, e.what());
    }
  }
  return kExitYes;
}

json ErrorJson(const std::string& kind, const std::string& what) {
  return {{"error", kind}, {"message", what}};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Structural controllability of interconnected systems"};
  app.require_subcommand(1);

  VerifyConfig verify;
  CLI::App* v = app.add_subcommand("verify", "Decide structural controllability");
  v->add_option("--mode", verify.mode, "Verification mode")
      ->check(CLI::IsMember({"centralized", "distributed", "serial",
                             "similar-thm1", "similar-thm2"}));
  v->add_option("--input", verify.input, "System or similar-system JSON file")
      ->required();
  v->add_option("--seed", verify.seed, "Seed for the numeric rank probe");
  v->add_option("--trace", verify.trace_path,
                "Write the message and snapshot trace (JSON lines)");
  v->add_option("--prd-state", verify.prd_state_path,
                "Write per-round region discharge state (JSON lines)");
  v->add_flag("--fig5-simplify", verify.fig5_simplify,
              "Leave incoming-neighbor copies out of discharge regions");
  v->add_flag("--require-connected", verify.require_connected,
              "Reject systems whose condensed graph is not weakly connected");
  v->add_option("--serial-variant", verify.serial_variant,
                "incoming (serial systems) or outgoing (in-degree at most one)");

  GenConfig gen;
  CLI::App* g = app.add_subcommand("gen", "Generate a random system file");
  g->add_option("--r", gen.r, "Number of subsystems")->check(CLI::PositiveNumber);
  g->add_option("--n", gen.n_range, "States per subsystem, <int> or <lo>-<hi>");
  g->add_option("--p", gen.p_range, "Inputs per subsystem, <int> or <lo>-<hi>");
  g->add_option("--density", gen.density, "Density of A (and H)")
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--b-density", gen.b_density, "Density of B")
      ->check(CLI::Range(0.0, 1.0));
  g->add_option("--e-density", gen.e_density, "Density of connection patterns")
      ->check(CLI::Range(0.0, 1.0));
  g->add_flag("--serial", gen.serial, "Every subsystem feeds at most one other");
  g->add_flag("--similar", gen.similar, "Similar-system specification");
  g->add_flag("--general", gen.general, "Arbitrary weakly connected topology");
  g->add_option("--seed", gen.seed, "Generator seed");
  g->add_option("--out", gen.out, "Output file")->required();

  TraceConfig trace;
  CLI::App* t = app.add_subcommand("trace", "Print a recorded trace");
  t->add_option("--input", trace.input, "Trace file written by verify --trace")
      ->required();
  t->add_option("--round", trace.round, "Only this round");
  t->add_option("--agent", trace.agent, "Only messages and snapshots of this agent");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitError;
  }

  try {
    if (v->parsed()) return CmdVerify(verify, out, err);
    if (g->parsed()) return CmdGen(gen, err);
    return CmdTrace(trace, out);
  } catch (const NotSerialError& e) {
    json report = ErrorJson("not_serial", e.what());
    report["offenders"] = e.offenders();
    out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
  } catch (const PreconditionError& e) {
    out << ErrorJson("precondition", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    out << ErrorJson("parse", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
  } catch (const Error& e) {
    out << ErrorJson("invalid", e.what()).dump(2) << "\n";
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace structctl::cli
