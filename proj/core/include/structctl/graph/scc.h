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

#ifndef STRUCTCTL_GRAPH_SCC_H_
#define STRUCTCTL_GRAPH_SCC_H_

#include <vector>

#include "structctl/graph/digraph.h"

namespace structctl::graph {

struct SccDecomposition {
  // component_of[v] is the component id of vertex v. Ids are assigned in
  // order of the smallest vertex they contain.
  std::vector<int> component_of;
  // Vertices of each component, ascending.
  std::vector<std::vector<int>> components;
  // Condensation over component ids.
  Digraph dag;
  // Components without incoming arcs from other components, ascending.
  std::vector<int> non_top_linked;
  // Components without outgoing arcs to other components, ascending.
  std::vector<int> non_bottom_linked;

  int num_components() const { return static_cast<int>(components.size()); }
};

// Strongly connected components (iterative Tarjan).
SccDecomposition StronglyConnectedComponents(const Digraph& g);

}  // namespace structctl::graph

#endif  // STRUCTCTL_GRAPH_SCC_H_
