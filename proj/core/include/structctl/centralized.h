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

#ifndef STRUCTCTL_CENTRALIZED_H_
#define STRUCTCTL_CENTRALIZED_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "structctl/graph/matching.h"
#include "structctl/sparsity_pattern.h"

namespace structctl::centralized {

// Which characterization produced a verdict.
enum class Criterion {
  kReachabilityAndMatching,  // every state input-reached + right-perfect
  kInputCacti,               // spanning disjoint input cacti
  kSccAndMatching,           // source SCCs are inputs + right-perfect
};
const char* CriterionName(Criterion c);

// Failure evidence. `unreached` lists every state no input reaches; when it
// is empty, `deficient` is a set of states whose left neighborhood
// `deficient_neighbors` is strictly smaller, so every maximum matching
// leaves one of them right-unmatched.
struct Violation {
  std::vector<int> unreached;
  std::vector<int> deficient;
  std::vector<int> deficient_neighbors;
};

// Input cactus over system digraph vertices (states 0..n-1, inputs n..).
// The stem starts at an input; each bud is a cycle entered through the arc
// (attach_from, cycle.front()) from a vertex already in the cactus.
struct Cactus {
  struct Bud {
    int attach_from = 0;
    std::vector<int> cycle;
  };
  std::vector<int> stem;
  std::vector<Bud> buds;
};

struct Verdict {
  bool controllable = false;
  Criterion criterion = Criterion::kReachabilityAndMatching;
  // Maximum matching of SystemBipartite(A, B); right-perfect when
  // controllable.
  graph::Matching matching;
  // BFS parents over the system digraph from all inputs (-1 roots, -2
  // unreached); a path to every state when controllable.
  std::vector<int> reach_parent;
  // Only for kInputCacti verdicts that hold.
  std::vector<Cactus> cacti;
  std::optional<Violation> violation;
};

// Reachability plus maximum matching. Throws DimensionError when A is not
// square or B has a different row count.
Verdict Verify(const SparsityPattern& A, const SparsityPattern& B);

// Builds a spanning family of disjoint input cacti from a right-perfect
// matching; false when none exists.
Verdict VerifyViaCacti(const SparsityPattern& A, const SparsityPattern& B);

// Non-top-linked SCCs of the system digraph contain inputs only, plus a
// right-perfect matching.
Verdict VerifyViaScc(const SparsityPattern& A, const SparsityPattern& B);

// Empty when `v` is consistent with (A, B), otherwise why not. Replays the
// matching, reachability paths, cacti and violation sets independently of
// the code that produced them.
std::string CheckVerdict(const SparsityPattern& A, const SparsityPattern& B,
                         const Verdict& v);

// Empty when the cacti are vertex disjoint, use only arcs of D(A, B), start
// at inputs and cover every state.
std::string CheckCacti(const SparsityPattern& A, const SparsityPattern& B,
                       const std::vector<Cactus>& cacti);

struct ProbeOptions {
  int trials = 3;
  double tolerance = 1e-8;
  int max_states = 64;
};

// Randomized Kalman test: draws values in +-[0.5, 1.5] for the nonzeros and
// computes the controllable subspace dimension by orthogonalized Krylov
// iteration. True if some trial reaches full dimension. Throws
// PreconditionError above max_states.
bool NumericProbe(const SparsityPattern& A, const SparsityPattern& B,
                  std::uint64_t seed, const ProbeOptions& options = {});

}  // namespace structctl::centralized

#endif  // STRUCTCTL_CENTRALIZED_H_
