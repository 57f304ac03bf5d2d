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

#include "structctl/graph/decomposition.h"

#include <algorithm>

#include "structctl/errors.h"

namespace structctl::graph {

PathCycleDecomposition DecomposePathsAndCycles(const Digraph& g,
                                               const Matching& m) {
  const int n = g.num_vertices();
  if (!m.IsValidFor(BipartiteGraph::Associated(g))) {
    throw PreconditionError(
        "not a matching of the bipartite graph associated with the digraph");
  }
  PathCycleDecomposition out;
  std::vector<char> used(n, 0);
  // Successor along a matched arc is LeftMate, predecessor is RightMate.
  for (int v = 0; v < n; ++v) {
    if (m.RightMate(v) != Matching::kUnmatched) continue;
    std::vector<int> path;
    for (int w = v; w != Matching::kUnmatched; w = m.LeftMate(w)) {
      path.push_back(w);
      used[w] = 1;
    }
    out.paths.push_back(std::move(path));
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    std::vector<int> cycle;
    for (int w = v; !used[w]; w = m.LeftMate(w)) {
      cycle.push_back(w);
      used[w] = 1;
    }
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

bool SpannedByCycles(const Digraph& g) {
  return MaxMatching(BipartiteGraph::Associated(g)).size() == g.num_vertices();
}

}  // namespace structctl::graph
