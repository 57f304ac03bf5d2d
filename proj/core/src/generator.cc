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

#include "structctl/generator.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "structctl/errors.h"

namespace structctl {

namespace {

int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(std::mt19937_64& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

void CheckParams(const GeneratorParams& p) {
  auto prob = [](double x) { return x >= 0.0 && x <= 1.0; };
  if (p.r < 1) throw PreconditionError("generator: r must be at least 1");
  if (p.n_min < 1 || p.n_min > p.n_max) {
    throw PreconditionError("generator: need 1 <= n_min <= n_max");
  }
  if (p.p_min < 0 || p.p_min > p.p_max) {
    throw PreconditionError("generator: need 0 <= p_min <= p_max");
  }
  if (!prob(p.a_density) || !prob(p.b_density) || !prob(p.e_density) ||
      !prob(p.extra_arc_prob)) {
    throw PreconditionError("generator: probabilities must lie in [0, 1]");
  }
}

}  // namespace

SparsityPattern RandomPattern(int rows, int cols, double density,
                              bool at_least_one, std::mt19937_64& rng) {
  std::vector<Entry> entries;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (Coin(rng, density)) entries.push_back({i, j});
    }
  }
  if (entries.empty() && at_least_one && rows > 0 && cols > 0) {
    entries.push_back({Uniform(rng, 0, rows - 1), Uniform(rng, 0, cols - 1)});
  }
  return SparsityPattern(rows, cols, std::move(entries));
}

InterconnectedSystem RandomSystem(const GeneratorParams& params,
                                  std::uint64_t seed) {
  CheckParams(params);
  std::mt19937_64 rng(seed);
  const int r = params.r;

  std::vector<Subsystem> subsystems;
  for (int id = 0; id < r; ++id) {
    Subsystem s;
    s.id = id;
    s.n = Uniform(rng, params.n_min, params.n_max);
    s.p = Uniform(rng, params.p_min, params.p_max);
    s.A = RandomPattern(s.n, s.n, params.a_density, false, rng);
    s.B = RandomPattern(s.n, s.p, params.b_density, false, rng);
    subsystems.push_back(std::move(s));
  }

  // Topology on a shuffled order so that ids carry no structure.
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> arcs;  // (from, to)
  if (params.topology == Topology::kSerial) {
    for (int k = 1; k < r; ++k) {
      arcs.emplace(order[k], order[Uniform(rng, 0, k - 1)]);
    }
    if (r > 1 && Coin(rng, params.extra_arc_prob)) {
      arcs.emplace(order[0], order[Uniform(rng, 1, r - 1)]);
    }
  } else {
    if (params.weakly_connected) {
      for (int k = 1; k < r; ++k) {
        const int a = order[k];
        const int b = order[Uniform(rng, 0, k - 1)];
        if (Coin(rng, 0.5)) {
          arcs.emplace(a, b);
        } else {
          arcs.emplace(b, a);
        }
      }
    }
    for (int from = 0; from < r; ++from) {
      for (int to = 0; to < r; ++to) {
        if (from != to && Coin(rng, params.extra_arc_prob)) {
          arcs.emplace(from, to);
        }
      }
    }
  }

  std::vector<Interconnection> connections;
  for (const auto& [from, to] : arcs) {
    Interconnection c;
    c.to = to;
    c.from = from;
    c.E = RandomPattern(subsystems[to].n, subsystems[from].n,
                        params.e_density, true, rng);
    connections.push_back(std::move(c));
  }
  return InterconnectedSystem::Create(std::move(subsystems),
                                      std::move(connections));
}

}  // namespace structctl
