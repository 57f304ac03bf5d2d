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

#include "structctl/graph/digraph.h"

#include <algorithm>
#include <deque>
#include <string>

#include "structctl/errors.h"

namespace structctl::graph {

Digraph::Digraph(int num_vertices, std::vector<Arc> arcs)
    : num_vertices_(num_vertices) {
  for (const Arc& a : arcs) {
    if (a.first < 0 || a.first >= num_vertices || a.second < 0 ||
        a.second >= num_vertices) {
      throw DimensionError("arc (" + std::to_string(a.first) + "," +
                           std::to_string(a.second) + ") outside " +
                           std::to_string(num_vertices) + " vertices");
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  out_begin_.assign(num_vertices + 1, 0);
  in_begin_.assign(num_vertices + 1, 0);
  for (const Arc& a : arcs) {
    ++out_begin_[a.first + 1];
    ++in_begin_[a.second + 1];
  }
  for (int v = 0; v < num_vertices; ++v) {
    out_begin_[v + 1] += out_begin_[v];
    in_begin_[v + 1] += in_begin_[v];
  }
  heads_.resize(arcs.size());
  tails_.resize(arcs.size());
  std::vector<int> in_fill(in_begin_.begin(), in_begin_.end() - 1);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    heads_[k] = arcs[k].second;  // arcs are sorted by tail already
    tails_[in_fill[arcs[k].second]++] = arcs[k].first;
  }
}

bool Digraph::HasArc(int tail, int head) const {
  auto out = OutNeighbors(tail);
  return std::binary_search(out.begin(), out.end(), head);
}

std::vector<Arc> Digraph::Arcs() const {
  std::vector<Arc> arcs;
  arcs.reserve(heads_.size());
  for (int v = 0; v < num_vertices_; ++v) {
    for (int w : OutNeighbors(v)) arcs.emplace_back(v, w);
  }
  return arcs;
}

Digraph Digraph::Reversed() const {
  std::vector<Arc> arcs;
  arcs.reserve(heads_.size());
  for (int v = 0; v < num_vertices_; ++v) {
    for (int w : OutNeighbors(v)) arcs.emplace_back(w, v);
  }
  return Digraph(num_vertices_, std::move(arcs));
}

std::vector<int> BfsParents(const Digraph& g, std::span<const int> sources) {
  std::vector<int> parent(g.num_vertices(), -2);
  std::deque<int> queue;
  for (int s : sources) {
    if (parent[s] == -2) {
      parent[s] = -1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.OutNeighbors(v)) {
      if (parent[w] == -2) {
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return parent;
}

std::vector<int> ReachableFrom(const Digraph& g, std::span<const int> sources) {
  const std::vector<int> parent = BfsParents(g, sources);
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (parent[v] != -2) out.push_back(v);
  }
  return out;
}

bool IsWeaklyConnected(const Digraph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (auto nbrs : {g.OutNeighbors(v), g.InNeighbors(v)}) {
      for (int w : nbrs) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
  }
  return count == g.num_vertices();
}

}  // namespace structctl::graph
