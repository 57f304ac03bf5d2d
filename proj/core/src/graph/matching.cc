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

#include "structctl/graph/matching.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "structctl/errors.h"

namespace structctl::graph {

BipartiteGraph::BipartiteGraph(int left_size, int right_size,
                               std::vector<BipartiteEdge> edges)
    : left_size_(left_size), right_size_(right_size) {
  if (left_size < 0 || right_size < 0) {
    throw DimensionError("negative bipartite side size");
  }
  for (const BipartiteEdge& e : edges) {
    if (e.first < 0 || e.first >= left_size || e.second < 0 ||
        e.second >= right_size) {
      throw DimensionError("bipartite edge (" + std::to_string(e.first) + "," +
                           std::to_string(e.second) + ") out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  begin_.assign(left_size + 1, 0);
  for (const BipartiteEdge& e : edges) ++begin_[e.first + 1];
  for (int l = 0; l < left_size; ++l) begin_[l + 1] += begin_[l];
  rights_.reserve(edges.size());
  for (const BipartiteEdge& e : edges) rights_.push_back(e.second);
}

BipartiteGraph BipartiteGraph::Associated(const Digraph& g) {
  return BipartiteGraph(g.num_vertices(), g.num_vertices(), g.Arcs());
}

bool BipartiteGraph::HasEdge(int left, int right) const {
  if (left < 0 || left >= left_size_) return false;
  auto nbrs = RightNeighbors(left);
  return std::binary_search(nbrs.begin(), nbrs.end(), right);
}

std::vector<BipartiteEdge> BipartiteGraph::Edges() const {
  std::vector<BipartiteEdge> out;
  out.reserve(rights_.size());
  for (int l = 0; l < left_size_; ++l) {
    for (int r : RightNeighbors(l)) out.emplace_back(l, r);
  }
  return out;
}

Matching Matching::FromEdges(int left_size, int right_size,
                             std::span<const BipartiteEdge> edges) {
  Matching m(left_size, right_size);
  for (const auto& [l, r] : edges) {
    if (l < 0 || l >= left_size || r < 0 || r >= right_size) {
      throw PreconditionError("matching edge out of range");
    }
    if (m.left_mate_[l] != kUnmatched || m.right_mate_[r] != kUnmatched) {
      throw PreconditionError("edges (" + std::to_string(l) + "," +
                              std::to_string(r) +
                              ") shares an endpoint with another edge");
    }
    m.Add(l, r);
  }
  return m;
}

void Matching::Add(int left, int right) {
  left_mate_[left] = right;
  right_mate_[right] = left;
  ++size_;
}

void Matching::Remove(int left, int right) {
  left_mate_[left] = kUnmatched;
  right_mate_[right] = kUnmatched;
  --size_;
}

std::vector<BipartiteEdge> Matching::Edges() const {
  std::vector<BipartiteEdge> out;
  out.reserve(size_);
  for (int l = 0; l < left_size(); ++l) {
    if (left_mate_[l] != kUnmatched) out.emplace_back(l, left_mate_[l]);
  }
  return out;
}

std::vector<int> Matching::RightUnmatched() const {
  std::vector<int> out;
  for (int r = 0; r < right_size(); ++r) {
    if (right_mate_[r] == kUnmatched) out.push_back(r);
  }
  return out;
}

std::vector<int> Matching::LeftUnmatched() const {
  std::vector<int> out;
  for (int l = 0; l < left_size(); ++l) {
    if (left_mate_[l] == kUnmatched) out.push_back(l);
  }
  return out;
}

bool Matching::IsValidFor(const BipartiteGraph& b) const {
  if (left_size() != b.left_size() || right_size() != b.right_size()) {
    return false;
  }
  int count = 0;
  for (int l = 0; l < left_size(); ++l) {
    const int r = left_mate_[l];
    if (r == kUnmatched) continue;
    if (right_mate_[r] != l || !b.HasEdge(l, r)) return false;
    ++count;
  }
  for (int r = 0; r < right_size(); ++r) {
    const int l = right_mate_[r];
    if (l != kUnmatched && left_mate_[l] != r) return false;
  }
  return count == size_;
}

namespace {

// Hopcroft-Karp phase state.
class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& b, Matching& m)
      : b_(b), m_(m), dist_(b.left_size()), next_(b.left_size()) {}

  void Run() {
    while (Bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int l = 0; l < b_.left_size(); ++l) {
        if (m_.LeftMate(l) == Matching::kUnmatched) Dfs(l);
      }
    }
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool Bfs() {
    std::deque<int> queue;
    for (int l = 0; l < b_.left_size(); ++l) {
      if (m_.LeftMate(l) == Matching::kUnmatched) {
        dist_[l] = 0;
        queue.push_back(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const int l = queue.front();
      queue.pop_front();
      for (int r : b_.RightNeighbors(l)) {
        const int mate = m_.RightMate(r);
        if (mate == Matching::kUnmatched) {
          found = true;
        } else if (dist_[mate] == kInf) {
          dist_[mate] = dist_[l] + 1;
          queue.push_back(mate);
        }
      }
    }
    return found;
  }

  // Iterative layered DFS from a free left vertex.
  bool Dfs(int root) {
    std::vector<int> path_left = {root};
    std::vector<int> path_right;
    while (!path_left.empty()) {
      const int l = path_left.back();
      auto nbrs = b_.RightNeighbors(l);
      bool advanced = false;
      while (next_[l] < static_cast<int>(nbrs.size())) {
        const int r = nbrs[next_[l]++];
        const int mate = m_.RightMate(r);
        if (mate == Matching::kUnmatched) {
          path_right.push_back(r);
          // Augment along the path.
          for (std::size_t k = 0; k < path_left.size(); ++k) {
            const int pl = path_left[k];
            const int pr = path_right[k];
            const int old = m_.LeftMate(pl);
            if (old != Matching::kUnmatched) m_.Remove(pl, old);
            if (m_.RightMate(pr) != Matching::kUnmatched) {
              m_.Remove(m_.RightMate(pr), pr);
            }
            m_.Add(pl, pr);
          }
          return true;
        }
        if (dist_[mate] == dist_[l] + 1) {
          path_right.push_back(r);
          path_left.push_back(mate);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist_[l] = kInf;
        path_left.pop_back();
        if (!path_right.empty()) path_right.pop_back();
      }
    }
    return false;
  }

  const BipartiteGraph& b_;
  Matching& m_;
  std::vector<int> dist_;
  std::vector<int> next_;
};

}  // namespace

Matching MaxMatching(const BipartiteGraph& b) {
  return MaxMatching(b, Matching(b.left_size(), b.right_size()));
}

Matching MaxMatching(const BipartiteGraph& b, Matching warm_start) {
  if (!warm_start.IsValidFor(b)) {
    throw PreconditionError("warm start is not a matching of the graph");
  }
  HopcroftKarp(b, warm_start).Run();
  return warm_start;
}

Matching MinWeightMaxMatching(const BipartiteGraph& b,
                              const EdgeWeight& weight) {
  const int n = std::max(b.left_size(), b.right_size());
  Matching result(b.left_size(), b.right_size());
  if (n == 0) return result;

  std::int64_t max_weight = 1;
  for (const auto& [l, r] : b.Edges()) {
    const std::int64_t w = weight(l, r);
    if (w <= 0) throw PreconditionError("edge weights must be positive");
    max_weight = std::max(max_weight, w);
  }
  // Any assignment using one more real edge beats any assignment with fewer.
  const std::int64_t sentinel = max_weight * n + 1;
  std::vector<std::vector<std::int64_t>> cost(
      n, std::vector<std::int64_t>(n, sentinel));
  for (const auto& [l, r] : b.Edges()) cost[l][r] = weight(l, r);

  // Shortest augmenting path Hungarian method with potentials, 1-based.
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
  std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      std::int64_t delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const std::int64_t cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  for (int j = 1; j <= n; ++j) {
    const int l = p[j] - 1;
    const int r = j - 1;
    if (l < b.left_size() && r < b.right_size() && b.HasEdge(l, r)) {
      result.Add(l, r);
    }
  }
  return result;
}

std::int64_t MatchingWeight(const Matching& m, const EdgeWeight& weight) {
  std::int64_t total = 0;
  for (const auto& [l, r] : m.Edges()) total += weight(l, r);
  return total;
}

Matching ExchangeUnmatched(const BipartiteGraph& b, const Matching& m1,
                           const Matching& m2) {
  if (!m1.IsValidFor(b) || !m2.IsValidFor(b)) {
    throw PreconditionError("exchange inputs must be matchings of the graph");
  }
  const int maximum = MaxMatching(b).size();
  if (m1.size() != maximum || m2.size() != maximum) {
    throw PreconditionError("exchange inputs must be maximum matchings");
  }
  // The symmetric difference splits into alternating cycles and even paths.
  // Flipping the paths whose endpoints are both left vertices moves the
  // left-unmatched set of m1 onto that of m2 and leaves the right side alone.
  Matching out = m1;
  std::vector<char> visited_left(b.left_size(), 0);
  for (int start = 0; start < b.left_size(); ++start) {
    // A left endpoint covered by m2 but not by m1.
    if (m1.LeftMate(start) != Matching::kUnmatched ||
        m2.LeftMate(start) == Matching::kUnmatched || visited_left[start]) {
      continue;
    }
    std::vector<BipartiteEdge> m1_edges;
    std::vector<BipartiteEdge> m2_edges;
    int l = start;
    bool ends_on_left = false;
    while (true) {
      visited_left[l] = 1;
      const int r = m2.LeftMate(l);
      if (r == Matching::kUnmatched) {
        ends_on_left = true;
        break;
      }
      m2_edges.emplace_back(l, r);
      const int next = m1.RightMate(r);
      if (next == Matching::kUnmatched) break;  // ends on the right side
      m1_edges.emplace_back(next, r);
      l = next;
    }
    if (!ends_on_left) continue;
    for (const auto& [el, er] : m1_edges) out.Remove(el, er);
    for (const auto& [el, er] : m2_edges) out.Add(el, er);
  }
  return out;
}

HallViolator FindHallViolator(const BipartiteGraph& b, const Matching& m) {
  std::vector<std::vector<int>> left_of(b.right_size());
  for (const auto& [l, r] : b.Edges()) left_of[r].push_back(l);
  std::vector<char> seen_right(b.right_size(), 0);
  std::vector<char> seen_left(b.left_size(), 0);
  std::deque<int> queue;
  for (int r : m.RightUnmatched()) {
    seen_right[r] = 1;
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (int l : left_of[r]) {
      if (seen_left[l]) continue;
      seen_left[l] = 1;
      const int mate = m.LeftMate(l);
      if (mate != Matching::kUnmatched && !seen_right[mate]) {
        seen_right[mate] = 1;
        queue.push_back(mate);
      }
    }
  }
  HallViolator out;
  for (int r = 0; r < b.right_size(); ++r) {
    if (seen_right[r]) out.rights.push_back(r);
  }
  for (int l = 0; l < b.left_size(); ++l) {
    if (seen_left[l]) out.neighbors.push_back(l);
  }
  return out;
}

}  // namespace structctl::graph
