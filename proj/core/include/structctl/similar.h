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

#ifndef STRUCTCTL_SIMILAR_H_
#define STRUCTCTL_SIMILAR_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "structctl/graph/matching.h"
#include "structctl/sparsity_pattern.h"
#include "structctl/system.h"

namespace structctl::similar {

// r copies of (Aprime, Bprime) coupled by H along the topology E:
//   A = (I_r kron Aprime) or (E kron H),  B = I_r kron Bprime.
struct SimilarSystemSpec {
  SparsityPattern Aprime;  // n x n
  SparsityPattern Bprime;  // n x p
  SparsityPattern H;       // n x n
  SparsityPattern E;       // r x r, zero diagonal

  int r() const { return E.rows(); }
  int n() const { return Aprime.rows(); }
  int p() const { return Bprime.cols(); }

  friend bool operator==(const SimilarSystemSpec&,
                         const SimilarSystemSpec&) = default;
};

// Throws DimensionError or ValidationError.
void Validate(const SimilarSystemSpec& spec);

// Subsystem i is (Aprime, Bprime); E(i, j) = 1 becomes a connection j -> i
// with pattern H. Requires H to be nonzero when E is.
InterconnectedSystem Expand(const SimilarSystemSpec& spec);

enum class Status { kHolds, kFails, kPreconditionUnmet };
const char* StatusName(Status s);

struct TheoremReport {
  Status status = Status::kPreconditionUnmet;
  // Why the precondition failed; empty otherwise.
  std::string precondition;
  // Sub-results, meaningful when the precondition holds.
  bool merged_controllable = false;  // (Aprime or H, Bprime)
  bool topology_condition = false;   // no sources / spanned by cycles
};

// Exact test: the expansion is controllable iff (Aprime or H, Bprime) is and
// the topology has no sources. Precondition: (Aprime, Bprime) is not
// controllable but B(Aprime, Bprime) has a right-perfect matching.
TheoremReport CheckTheorem1(const SimilarSystemSpec& spec);

// Sufficient test: (Aprime or H, Bprime) controllable and the topology
// spanned by cycles. Precondition: (Aprime, Bprime) is not controllable.
TheoremReport CheckTheorem2(const SimilarSystemSpec& spec);

// Edges of a matching of B(Aprime or H, Bprime) split by origin. An edge
// present in both Aprime and H counts as internal.
struct EdgeClasses {
  std::vector<graph::BipartiteEdge> input;     // (n + k, l) from Bprime
  std::vector<graph::BipartiteEdge> internal;  // from Aprime
  std::vector<graph::BipartiteEdge> coupling;  // from H only
};
EdgeClasses ClassifyEdges(const SimilarSystemSpec& spec,
                          const graph::Matching& merged);

// When E is spanned by cycles and B(Aprime or H, Bprime) has a right-perfect
// matching, lifts it to a right-perfect matching of the expanded system's
// bipartite graph (global numbering of AssembleGlobal). Otherwise nullopt.
std::optional<graph::Matching> LiftMatching(const SimilarSystemSpec& spec);

// {"similar": {"r": 3, "Aprime": [...], "Bprime": [...], "H": [...],
//  "E": [...]}}. Optional "n" and "p" fix the subsystem size; otherwise n is
// one more than the largest index used by Aprime, Bprime rows and H, and p
// one more than the largest Bprime column.
SimilarSystemSpec SpecFromJson(const nlohmann::json& doc);
nlohmann::json SpecToJson(const SimilarSystemSpec& spec);

struct SpecParams {
  int r_min = 2;
  int r_max = 5;
  int n_min = 1;
  int n_max = 6;
  int p_min = 1;
  int p_max = 2;
  double a_density = 0.3;
  double b_density = 0.2;
  double h_density = 0.2;
  double e_density = 0.4;
};

// Deterministic for a given seed; H always has at least one nonzero.
SimilarSystemSpec RandomSpec(const SpecParams& params, std::uint64_t seed);

}  // namespace structctl::similar

#endif  // STRUCTCTL_SIMILAR_H_
