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

#ifndef STRUCTCTL_GRAPH_DIGRAPH_H_
#define STRUCTCTL_GRAPH_DIGRAPH_H_

#include <span>
#include <utility>
#include <vector>

namespace structctl::graph {

using Arc = std::pair<int, int>;  // (tail, head)

// Static directed graph in compressed adjacency form. Parallel arcs are
// merged; out- and in-neighbor lists are sorted ascending.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int num_vertices, std::vector<Arc> arcs);

  int num_vertices() const { return num_vertices_; }
  int num_arcs() const { return static_cast<int>(heads_.size()); }

  std::span<const int> OutNeighbors(int v) const {
    return {heads_.data() + out_begin_[v], heads_.data() + out_begin_[v + 1]};
  }
  std::span<const int> InNeighbors(int v) const {
    return {tails_.data() + in_begin_[v], tails_.data() + in_begin_[v + 1]};
  }
  int OutDegree(int v) const { return out_begin_[v + 1] - out_begin_[v]; }
  int InDegree(int v) const { return in_begin_[v + 1] - in_begin_[v]; }

  bool HasArc(int tail, int head) const;

  // Arcs sorted by (tail, head).
  std::vector<Arc> Arcs() const;

  Digraph Reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.Arcs() == b.Arcs();
  }

 private:
  int num_vertices_ = 0;
  std::vector<int> out_begin_ = {0};
  std::vector<int> heads_;
  std::vector<int> in_begin_ = {0};
  std::vector<int> tails_;
};

// Vertices reachable from any of `sources` (sources included), ascending.
std::vector<int> ReachableFrom(const Digraph& g, std::span<const int> sources);

// BFS forest from `sources`: parent[v] is the predecessor on a shortest path
// from the nearest source, -1 for sources, -2 for unreached vertices.
std::vector<int> BfsParents(const Digraph& g, std::span<const int> sources);

bool IsWeaklyConnected(const Digraph& g);

}  // namespace structctl::graph

#endif  // STRUCTCTL_GRAPH_DIGRAPH_H_
