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

#ifndef STRUCTCTL_GRAPH_MATCHING_H_
#define STRUCTCTL_GRAPH_MATCHING_H_

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "structctl/graph/digraph.h"

namespace structctl::graph {

using BipartiteEdge = std::pair<int, int>;  // (left, right)

// Bipartite graph B(S1, S2, E) with S1 = {0..left_size-1} and
// S2 = {0..right_size-1}. Adjacency lists are sorted ascending.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int left_size, int right_size,
                 std::vector<BipartiteEdge> edges);

  // The bipartite graph associated with a digraph: B(V, V, E).
  static BipartiteGraph Associated(const Digraph& g);

  int left_size() const { return left_size_; }
  int right_size() const { return right_size_; }
  int num_edges() const { return static_cast<int>(rights_.size()); }

  std::span<const int> RightNeighbors(int left) const {
    return {rights_.data() + begin_[left], rights_.data() + begin_[left + 1]};
  }
  bool HasEdge(int left, int right) const;

  // Edges sorted by (left, right).
  std::vector<BipartiteEdge> Edges() const;

 private:
  int left_size_ = 0;
  int right_size_ = 0;
  std::vector<int> begin_ = {0};
  std::vector<int> rights_;
};

// A set of vertex-disjoint bipartite edges, kept as two mate arrays.
class Matching {
 public:
  static constexpr int kUnmatched = -1;

  Matching() = default;
  Matching(int left_size, int right_size)
      : left_mate_(left_size, kUnmatched), right_mate_(right_size, kUnmatched) {}

  // Throws PreconditionError if two edges share an endpoint or an index is
  // out of range.
  static Matching FromEdges(int left_size, int right_size,
                            std::span<const BipartiteEdge> edges);

  int left_size() const { return static_cast<int>(left_mate_.size()); }
  int right_size() const { return static_cast<int>(right_mate_.size()); }
  int size() const { return size_; }

  int LeftMate(int left) const { return left_mate_[left]; }
  int RightMate(int right) const { return right_mate_[right]; }

  void Add(int left, int right);
  void Remove(int left, int right);

  std::vector<BipartiteEdge> Edges() const;
  std::vector<int> RightUnmatched() const;  // U_R
  std::vector<int> LeftUnmatched() const;   // U_L

  // Every edge of the matching is an edge of `b` and sizes agree.
  bool IsValidFor(const BipartiteGraph& b) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<int> left_mate_;
  std::vector<int> right_mate_;
  int size_ = 0;
};

// Maximum-cardinality matching (Hopcroft-Karp). Deterministic for a given
// graph: BFS layers and DFS scans follow ascending vertex ids.
Matching MaxMatching(const BipartiteGraph& b);

// Same, starting from a valid (not necessarily maximum) matching.
Matching MaxMatching(const BipartiteGraph& b, Matching warm_start);

using EdgeWeight = std::function<std::int64_t(int left, int right)>;

// Maximum-cardinality matching of minimum total weight among all maximum
// matchings (Hungarian method on a square cost matrix padded with a
// sentinel weight for non-edges). Weights must be positive.
Matching MinWeightMaxMatching(const BipartiteGraph& b, const EdgeWeight& weight);

std::int64_t MatchingWeight(const Matching& m, const EdgeWeight& weight);

// Given maximum matchings m1 and m2 of b, returns a maximum matching whose
// right-unmatched set equals U_R(m1) and whose left-unmatched set equals
// U_L(m2). Throws PreconditionError when either input is not a maximum
// matching of b.
Matching ExchangeUnmatched(const BipartiteGraph& b, const Matching& m1,
                           const Matching& m2);

// König certificate for a maximum matching m: right vertices reachable by
// alternating paths from U_R(m) together with their left neighbors. When
// U_R(m) is non-empty, |neighbors| = |rights| - |U_R(m)| < |rights|.
struct HallViolator {
  std::vector<int> rights;
  std::vector<int> neighbors;
};
HallViolator FindHallViolator(const BipartiteGraph& b, const Matching& m);

}  // namespace structctl::graph

#endif  // STRUCTCTL_GRAPH_MATCHING_H_
