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

#include "structctl/similar.h"

#include <algorithm>
#include <random>

#include "structctl/centralized.h"
#include "structctl/errors.h"
#include "structctl/generator.h"
#include "structctl/graph/decomposition.h"
#include "structctl/graphs.h"
#include "structctl/io.h"

namespace structctl::similar {

using nlohmann::json;

void Validate(const SimilarSystemSpec& spec) {
  const int n = spec.n();
  if (n <= 0) throw DimensionError("Aprime must have at least one state");
  if (spec.Aprime.cols() != n) throw DimensionError("Aprime must be square");
  if (spec.Bprime.rows() != n) {
    throw DimensionError("Bprime must have as many rows as Aprime");
  }
  if (spec.H.rows() != n || spec.H.cols() != n) {
    throw DimensionError("H must have the shape of Aprime");
  }
  if (spec.r() <= 0 || spec.E.cols() != spec.r()) {
    throw DimensionError("E must be a non-empty square pattern");
  }
  for (Entry e : spec.E.entries()) {
    if (e.row == e.col) throw ValidationError("E must have a zero diagonal");
  }
  if (!spec.E.empty() && spec.H.empty()) {
    throw ValidationError("H must be nonzero when E has arcs");
  }
}

InterconnectedSystem Expand(const SimilarSystemSpec& spec) {
  Validate(spec);
  std::vector<Subsystem> subsystems;
  for (int i = 0; i < spec.r(); ++i) {
    subsystems.push_back({i, spec.n(), spec.p(), spec.Aprime, spec.Bprime});
  }
  std::vector<Interconnection> connections;
  for (Entry e : spec.E.entries()) {
    connections.push_back({e.row, e.col, spec.H});
  }
  return InterconnectedSystem::Create(std::move(subsystems),
                                      std::move(connections));
}

const char* StatusName(Status s) {
  switch (s) {
    case Status::kHolds:
      return "holds";
    case Status::kFails:
      return "fails";
    case Status::kPreconditionUnmet:
      return "precondition-unmet";
  }
  return "unknown";
}

TheoremReport CheckTheorem1(const SimilarSystemSpec& spec) {
  Validate(spec);
  TheoremReport report;
  const centralized::Verdict own =
      centralized::Verify(spec.Aprime, spec.Bprime);
  if (own.controllable) {
    report.precondition = "(Aprime, Bprime) is structurally controllable";
    return report;
  }
  if (own.matching.size() < spec.n()) {
    report.precondition =
        "B(Aprime, Bprime) has no matching covering every state";
    return report;
  }
  report.merged_controllable =
      centralized::Verify(spec.Aprime.Or(spec.H), spec.Bprime).controllable;
  report.topology_condition = !Condense(Expand(spec)).HasSources();
  report.status = report.merged_controllable && report.topology_condition
                      ? Status::kHolds
                      : Status::kFails;
  return report;
}

TheoremReport CheckTheorem2(const SimilarSystemSpec& spec) {
  Validate(spec);
  TheoremReport report;
  if (centralized::Verify(spec.Aprime, spec.Bprime).controllable) {
    report.precondition = "(Aprime, Bprime) is structurally controllable";
    return report;
  }
  report.merged_controllable =
      centralized::Verify(spec.Aprime.Or(spec.H), spec.Bprime).controllable;
  report.topology_condition =
      graph::SpannedByCycles(Condense(Expand(spec)).graph);
  report.status = report.merged_controllable && report.topology_condition
                      ? Status::kHolds
                      : Status::kFails;
  return report;
}

EdgeClasses ClassifyEdges(const SimilarSystemSpec& spec,
                          const graph::Matching& merged) {
  const int n = spec.n();
  EdgeClasses out;
  for (const auto& [l, r] : merged.Edges()) {
    if (l >= n) {
      out.input.emplace_back(l, r);
    } else if (spec.Aprime.Contains(r, l)) {
      out.internal.emplace_back(l, r);
    } else {
      out.coupling.emplace_back(l, r);
    }
  }
  return out;
}

std::optional<graph::Matching> LiftMatching(const SimilarSystemSpec& spec) {
  Validate(spec);
  const int n = spec.n();
  const int r = spec.r();
  const graph::Matching merged =
      graph::MaxMatching(SystemBipartite(spec.Aprime.Or(spec.H), spec.Bprime));
  if (merged.size() < n) return std::nullopt;
  // A cycle cover of E: cover.RightMate(i) is the predecessor feeding i.
  const graph::Digraph topology = Condense(Expand(spec)).graph;
  const graph::Matching cover =
      graph::MaxMatching(graph::BipartiteGraph::Associated(topology));
  if (cover.size() < r) return std::nullopt;

  const EdgeClasses classes = ClassifyEdges(spec, merged);
  const int total = n * r;
  graph::Matching lifted(total + spec.p() * r, total);
  for (int i = 0; i < r; ++i) {
    const int x0 = i * n;
    for (const auto& [l, k] : classes.input) {
      lifted.Add(total + i * spec.p() + (l - n), x0 + k);
    }
    for (const auto& [l, k] : classes.internal) lifted.Add(x0 + l, x0 + k);
    const int pred = cover.RightMate(i);
    for (const auto& [l, k] : classes.coupling) {
      lifted.Add(pred * n + l, x0 + k);
    }
  }
  return lifted;
}

namespace {

// Largest row and column index in a [[r, c], ...] array, -1 when empty.
std::pair<int, int> Extent(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where, "expected an array of [row, col]");
  int rows = -1;
  int cols = -1;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& pair = j[k];
    if (!pair.is_array() || pair.size() != 2 ||
        !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw ParseError(where + "[" + std::to_string(k) + "]",
                       "expected a [row, col] integer pair");
    }
    rows = std::max(rows, pair[0].get<int>());
    cols = std::max(cols, pair[1].get<int>());
  }
  return {rows, cols};
}

}  // namespace

SimilarSystemSpec SpecFromJson(const json& doc) {
  CheckKeys(doc, {"similar"}, {"similar"}, "$");
  const json& s = doc.at("similar");
  const std::string at = "$.similar";
  CheckKeys(s, {"r", "Aprime", "Bprime", "H", "E"},
            {"r", "n", "p", "Aprime", "Bprime", "H", "E"}, at);
  const int r = IntField(s, "r", at);
  if (r <= 0) throw ParseError(at + ".r", "must be positive");

  const auto [a_rows, a_cols] = Extent(s.at("Aprime"), at + ".Aprime");
  const auto [b_rows, b_cols] = Extent(s.at("Bprime"), at + ".Bprime");
  const auto [h_rows, h_cols] = Extent(s.at("H"), at + ".H");
  int n = 1 + std::max({a_rows, a_cols, b_rows, h_rows, h_cols});
  int p = 1 + b_cols;
  if (s.contains("n")) {
    n = IntField(s, "n", at);
    if (n <= 0) throw ParseError(at + ".n", "must be positive");
  }
  if (s.contains("p")) {
    p = IntField(s, "p", at);
    if (p < 0) throw ParseError(at + ".p", "must be non-negative");
  }
  if (n <= 0) throw ParseError(at, "cannot infer n from empty patterns");

  SimilarSystemSpec spec;
  spec.Aprime = PatternFromJson(s.at("Aprime"), n, n, at + ".Aprime");
  spec.Bprime = PatternFromJson(s.at("Bprime"), n, p, at + ".Bprime");
  spec.H = PatternFromJson(s.at("H"), n, n, at + ".H");
  spec.E = PatternFromJson(s.at("E"), r, r, at + ".E");
  try {
    Validate(spec);
  } catch (const Error& e) {
    throw ParseError(at, e.what());
  }
  return spec;
}

json SpecToJson(const SimilarSystemSpec& spec) {
  json body = json::object();
  body["r"] = spec.r();
  body["n"] = spec.n();
  body["p"] = spec.p();
  body["Aprime"] = PatternToJson(spec.Aprime);
  body["Bprime"] = PatternToJson(spec.Bprime);
  body["H"] = PatternToJson(spec.H);
  body["E"] = PatternToJson(spec.E);
  json doc = json::object();
  doc["similar"] = std::move(body);
  return doc;
}

SimilarSystemSpec RandomSpec(const SpecParams& params, std::uint64_t seed) {
  if (params.r_min < 1 || params.r_min > params.r_max ||
      params.n_min < 1 || params.n_min > params.n_max || params.p_min < 0 ||
      params.p_min > params.p_max) {
    throw PreconditionError("similar generator: empty or invalid range");
  }
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int r = uniform(params.r_min, params.r_max);
  const int n = uniform(params.n_min, params.n_max);
  const int p = uniform(params.p_min, params.p_max);
  SimilarSystemSpec spec;
  spec.Aprime = RandomPattern(n, n, params.a_density, false, rng);
  spec.Bprime = RandomPattern(n, p, params.b_density, false, rng);
  spec.H = RandomPattern(n, n, params.h_density, true, rng);
  std::vector<Entry> arcs;
  std::bernoulli_distribution coin(params.e_density);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      if (i != j && coin(rng)) arcs.push_back({i, j});
    }
  }
  spec.E = SparsityPattern(r, r, std::move(arcs));
  return spec;
}

}  // namespace structctl::similar
