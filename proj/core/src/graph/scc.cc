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

#include "structctl/graph/scc.h"

#include <algorithm>

namespace structctl::graph {

SccDecomposition StronglyConnectedComponents(const Digraph& g) {
  const int n = g.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), raw_component(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;
  int raw_count = 0;

  struct Frame {
    int v;
    int edge;
  };
  std::vector<Frame> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      auto out = g.OutNeighbors(f.v);
      if (f.edge < static_cast<int>(out.size())) {
        const int w = out[f.edge++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const int v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          raw_component[w] = raw_count;
        } while (w != v);
        ++raw_count;
      }
    }
  }

  // Renumber components by smallest member vertex.
  std::vector<int> renumber(raw_count, -1);
  int next_id = 0;
  SccDecomposition out;
  out.component_of.resize(n);
  for (int v = 0; v < n; ++v) {
    int& id = renumber[raw_component[v]];
    if (id == -1) id = next_id++;
    out.component_of[v] = id;
  }
  out.components.resize(next_id);
  for (int v = 0; v < n; ++v) out.components[out.component_of[v]].push_back(v);

  std::vector<Arc> dag_arcs;
  for (int v = 0; v < n; ++v) {
    for (int w : g.OutNeighbors(v)) {
      const int a = out.component_of[v];
      const int b = out.component_of[w];
      if (a != b) dag_arcs.emplace_back(a, b);
    }
  }
  out.dag = Digraph(next_id, std::move(dag_arcs));
  for (int c = 0; c < next_id; ++c) {
    if (out.dag.InDegree(c) == 0) out.non_top_linked.push_back(c);
    if (out.dag.OutDegree(c) == 0) out.non_bottom_linked.push_back(c);
  }
  return out;
}

}  // namespace structctl::graph
