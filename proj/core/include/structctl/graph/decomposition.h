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

#ifndef STRUCTCTL_GRAPH_DECOMPOSITION_H_
#define STRUCTCTL_GRAPH_DECOMPOSITION_H_

#include <vector>

#include "structctl/graph/digraph.h"
#include "structctl/graph/matching.h"

namespace structctl::graph {

// Vertex-disjoint elementary paths and cycles spanning a digraph. A path is
// listed from its first vertex (right-unmatched) to its last (left-unmatched);
// an isolated vertex is a path of length zero. A cycle lists its vertices in
// arc order starting from its smallest vertex.
struct PathCycleDecomposition {
  std::vector<std::vector<int>> paths;
  std::vector<std::vector<int>> cycles;
};

// Reads the subgraph (V, M) induced by a matching of the bipartite graph
// associated with `g` as paths and cycles. Throws PreconditionError when `m`
// is not a matching of B(V, V, E).
PathCycleDecomposition DecomposePathsAndCycles(const Digraph& g,
                                               const Matching& m);

// True iff vertex-disjoint cycles cover every vertex, i.e. the associated
// bipartite graph has a perfect matching. The empty graph is spanned.
bool SpannedByCycles(const Digraph& g);

}  // namespace structctl::graph

#endif  // STRUCTCTL_GRAPH_DECOMPOSITION_H_
