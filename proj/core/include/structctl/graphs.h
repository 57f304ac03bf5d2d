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

#ifndef STRUCTCTL_GRAPHS_H_
#define STRUCTCTL_GRAPHS_H_

#include <string>
#include <vector>

#include "structctl/graph/digraph.h"
#include "structctl/graph/matching.h"
#include "structctl/sparsity_pattern.h"
#include "structctl/system.h"

namespace structctl {

// Vertex numbering used by every builder below: states x_0..x_{n-1} are
// vertices 0..n-1 and inputs u_0..u_{p-1} are vertices n..n+p-1. An arc
// (x_j, x_i) exists iff A(i, j) is nonzero, (u_j, x_i) iff B(i, j) is.

graph::Digraph StateDigraph(const SparsityPattern& A);
graph::Digraph SystemDigraph(const SparsityPattern& A, const SparsityPattern& B);

// Left = states then inputs, right = states.
graph::BipartiteGraph StateBipartite(const SparsityPattern& A);
graph::BipartiteGraph SystemBipartite(const SparsityPattern& A,
                                      const SparsityPattern& B);

// States with a directed path from some input vertex of a system digraph
// over `num_states` states, ascending. Isolated inputs contribute nothing.
std::vector<int> InputReachable(const graph::Digraph& system_digraph,
                                int num_states);

enum class VertexKind { kState, kInput };

// Origin of a global vertex of the assembled system.
struct VertexTag {
  VertexKind kind = VertexKind::kState;
  int subsystem = 0;
  int local = 0;

  friend bool operator==(const VertexTag&, const VertexTag&) = default;
};

// Tags for the global vertices of SystemDigraph(AssembleGlobal(sys)).
std::vector<VertexTag> GlobalVertexTags(const InterconnectedSystem& sys);
std::string VertexName(const VertexTag& tag);

// One vertex per subsystem and an arc from -> to per connection.
struct CondensedGraph {
  graph::Digraph graph;
  std::vector<int> sources;  // no incoming arc, ascending

  int OutDegree(int id) const { return graph.OutDegree(id); }
  bool HasSources() const { return !sources.empty(); }
  bool IsWeaklyConnected() const { return graph::IsWeaklyConnected(graph); }
};

CondensedGraph Condense(const InterconnectedSystem& sys);

// Throws ValidationError when the condensed graph is not weakly connected.
void RequireWeaklyConnected(const InterconnectedSystem& sys);

}  // namespace structctl

#endif  // STRUCTCTL_GRAPHS_H_
