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

#include "structctl/graphs.h"

#include "structctl/errors.h"

namespace structctl {

namespace {

void CheckShapes(const SparsityPattern& A, const SparsityPattern& B) {
  if (A.rows() != A.cols()) throw DimensionError("A must be square");
  if (B.rows() != A.rows()) {
    throw DimensionError("B must have as many rows as A");
  }
}

}  // namespace

graph::Digraph StateDigraph(const SparsityPattern& A) {
  return SystemDigraph(A, SparsityPattern(A.rows(), 0));
}

graph::Digraph SystemDigraph(const SparsityPattern& A,
                             const SparsityPattern& B) {
  CheckShapes(A, B);
  const int n = A.rows();
  std::vector<graph::Arc> arcs;
  arcs.reserve(A.nnz() + B.nnz());
  for (Entry e : A.entries()) arcs.emplace_back(e.col, e.row);
  for (Entry e : B.entries()) arcs.emplace_back(n + e.col, e.row);
  return graph::Digraph(n + B.cols(), std::move(arcs));
}

graph::BipartiteGraph StateBipartite(const SparsityPattern& A) {
  return SystemBipartite(A, SparsityPattern(A.rows(), 0));
}

graph::BipartiteGraph SystemBipartite(const SparsityPattern& A,
                                      const SparsityPattern& B) {
  CheckShapes(A, B);
  const int n = A.rows();
  std::vector<graph::BipartiteEdge> edges;
  edges.reserve(A.nnz() + B.nnz());
  for (Entry e : A.entries()) edges.emplace_back(e.col, e.row);
  for (Entry e : B.entries()) edges.emplace_back(n + e.col, e.row);
  return graph::BipartiteGraph(n + B.cols(), n, std::move(edges));
}

std::vector<int> InputReachable(const graph::Digraph& system_digraph,
                                int num_states) {
  std::vector<int> inputs;
  for (int u = num_states; u < system_digraph.num_vertices(); ++u) {
    inputs.push_back(u);
  }
  std::vector<int> reached = graph::ReachableFrom(system_digraph, inputs);
  std::erase_if(reached, [&](int v) { return v >= num_states; });
  return reached;
}

std::vector<VertexTag> GlobalVertexTags(const InterconnectedSystem& sys) {
  std::vector<VertexTag> tags;
  tags.reserve(sys.total_states() + sys.total_inputs());
  for (const Subsystem& s : sys.subsystems()) {
    for (int k = 0; k < s.n; ++k) tags.push_back({VertexKind::kState, s.id, k});
  }
  for (const Subsystem& s : sys.subsystems()) {
    for (int k = 0; k < s.p; ++k) tags.push_back({VertexKind::kInput, s.id, k});
  }
  return tags;
}

std::string VertexName(const VertexTag& tag) {
  return (tag.kind == VertexKind::kState ? "x" : "u") +
         std::to_string(tag.local) + "@" + std::to_string(tag.subsystem);
}

CondensedGraph Condense(const InterconnectedSystem& sys) {
  std::vector<graph::Arc> arcs;
  for (const Interconnection& c : sys.connections()) {
    arcs.emplace_back(c.from, c.to);
  }
  CondensedGraph out;
  out.graph = graph::Digraph(sys.num_subsystems(), std::move(arcs));
  for (int i = 0; i < sys.num_subsystems(); ++i) {
    if (out.graph.InDegree(i) == 0) out.sources.push_back(i);
  }
  return out;
}

void RequireWeaklyConnected(const InterconnectedSystem& sys) {
  if (!Condense(sys).IsWeaklyConnected()) {
    throw ValidationError(
        "condensed graph is not weakly connected; distributed algorithms "
        "need every subsystem linked to the others");
  }
}

}  // namespace structctl
