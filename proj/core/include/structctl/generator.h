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

#ifndef STRUCTCTL_GENERATOR_H_
#define STRUCTCTL_GENERATOR_H_

#include <cstdint>
#include <random>

#include "structctl/sparsity_pattern.h"
#include "structctl/system.h"

namespace structctl {

enum class Topology {
  // Random spanning tree with random arc directions plus extra arcs.
  kGeneral,
  // Every subsystem feeds at most one other (in-forest, optionally closed
  // into one cycle).
  kSerial,
};

struct GeneratorParams {
  int r = 4;
  int n_min = 1;
  int n_max = 8;
  int p_min = 1;
  int p_max = 1;
  double a_density = 0.25;  // per-entry probability inside A_i
  double b_density = 0.2;   // per-entry probability inside B_i
  double e_density = 0.2;   // per-entry probability inside E_{i,j}
  // kGeneral: probability of each extra ordered pair beyond the tree.
  // kSerial: probability that the root also feeds some subsystem.
  double extra_arc_prob = 0.15;
  Topology topology = Topology::kGeneral;
  // When false, kGeneral skips the spanning tree.
  bool weakly_connected = true;
};

// Throws PreconditionError for infeasible parameters (empty ranges,
// probabilities outside [0, 1], r < 1). Deterministic for a given seed.
InterconnectedSystem RandomSystem(const GeneratorParams& params,
                                  std::uint64_t seed);

// Each entry independently nonzero with probability `density`. When
// `at_least_one` is set and the draw is empty, one uniform entry is added.
SparsityPattern RandomPattern(int rows, int cols, double density,
                              bool at_least_one, std::mt19937_64& rng);

}  // namespace structctl

#endif  // STRUCTCTL_GENERATOR_H_
