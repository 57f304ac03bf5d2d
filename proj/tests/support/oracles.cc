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

#include "oracles.h"

#include <functional>
#include <limits>
#include <map>
#include <stdexcept>

namespace structctl::testing {
namespace {

std::vector<std::vector<int>> Adjacency(const graph::BipartiteGraph& b) {
  std::vector<std::vector<int>> adj(b.left_size());
  for (const auto& [l, r] : b.Edges()) adj[l].push_back(r);
  return adj;
}

// Kuhn's augmenting path matching; returns the number of covered rights.
int KuhnMatching(int left, int right,
                 const std::vector<std::vector<int>>& adj) {
  std::vector<int> mate(right, -1);
  int size = 0;
  for (int l = 0; l < left; ++l) {
    std::vector<char> seen(right, 0);
    std::function<bool(int)> augment = [&](int u) {
      for (int r : adj[u]) {
        if (seen[r]) continue;
        seen[r] = 1;
        if (mate[r] < 0 || augment(mate[r])) {
          mate[r] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(l)) ++size;
  }
  return size;
}

std::vector<std::vector<std::pair<int, int>>> AllMaximumMatchings(
    const SparsityPattern& A) {
  std::vector<std::pair<int, int>> edges;  // (left = col, right = row)
  for (Entry e : A.entries()) edges.emplace_back(e.col, e.row);
  std::vector<std::vector<std::pair<int, int>>> all;
  std::vector<std::pair<int, int>> current;
  std::vector<char> left_used(A.rows(), 0), right_used(A.rows(), 0);
  std::function<void(std::size_t)> walk = [&](std::size_t k) {
    if (k == edges.size()) {
      all.push_back(current);
      return;
    }
    walk(k + 1);
    const auto [l, r] = edges[k];
    if (!left_used[l] && !right_used[r]) {
      left_used[l] = right_used[r] = 1;
      current.push_back(edges[k]);
      walk(k + 1);
      current.pop_back();
      left_used[l] = right_used[r] = 0;
    }
  };
  walk(0);
  std::size_t best = 0;
  for (const auto& m : all) best = std::max(best, m.size());
  std::vector<std::vector<std::pair<int, int>>> maximum;
  for (auto& m : all) {
    if (m.size() == best) maximum.push_back(std::move(m));
  }
  return maximum;
}

}  // namespace

int BruteMatchingSize(const graph::BipartiteGraph& b) {
  if (b.right_size() > 20) throw std::invalid_argument("right side too large");
  const auto adj = Adjacency(b);
  const int L = b.left_size();
  const std::size_t masks = std::size_t{1} << b.right_size();
  // best[mask] after processing lefts 0..i-1: largest matching using
  // exactly the rights in mask, or -1.
  std::vector<int> best(masks, -1);
  best[0] = 0;
  for (int l = 0; l < L; ++l) {
    std::vector<int> next = best;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (best[mask] < 0) continue;
      for (int r : adj[l]) {
        if (mask & (std::size_t{1} << r)) continue;
        const std::size_t to = mask | (std::size_t{1} << r);
        next[to] = std::max(next[to], best[mask] + 1);
      }
    }
    best = std::move(next);
  }
  int answer = 0;
  for (int v : best) answer = std::max(answer, v);
  return answer;
}

BruteWeighted BruteMinWeightMaxMatching(const graph::BipartiteGraph& b,
                                        const graph::EdgeWeight& weight) {
  if (b.right_size() > 20) throw std::invalid_argument("right side too large");
  const auto adj = Adjacency(b);
  const std::size_t masks = std::size_t{1} << b.right_size();
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  // cost[mask]: minimum weight of a matching covering exactly `mask`.
  std::vector<std::int64_t> cost(masks, kNone);
  cost[0] = 0;
  for (int l = 0; l < b.left_size(); ++l) {
    std::vector<std::int64_t> next = cost;
    for (std::size_t mask = 0; mask < masks; ++mask) {
      if (cost[mask] == kNone) continue;
      for (int r : adj[l]) {
        if (mask & (std::size_t{1} << r)) continue;
        const std::size_t to = mask | (std::size_t{1} << r);
        next[to] = std::min(next[to], cost[mask] + weight(l, r));
      }
    }
    cost = std::move(next);
  }
  BruteWeighted out;
  out.weight = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (cost[mask] == kNone) continue;
    const int size = __builtin_popcountll(mask);
    if (size > out.size || (size == out.size && cost[mask] < out.weight)) {
      out.size = size;
      out.weight = cost[mask];
    }
  }
  return out;
}

std::vector<std::vector<char>> MutualReachability(
    int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) reach[v][v] = 1;
  for (const auto& [t, h] : arcs) reach[t][h] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = 1;
      }
    }
  }
  std::vector<std::vector<char>> same(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) same[i][j] = reach[i][j] && reach[j][i];
  }
  return same;
}

Dense NaiveGlobalA(const InterconnectedSystem& sys) {
  std::vector<int> offset = {0};
  for (const Subsystem& s : sys.subsystems()) offset.push_back(offset.back() + s.n);
  Dense A(offset.back(), std::vector<int>(offset.back(), 0));
  for (const Subsystem& s : sys.subsystems()) {
    for (int i = 0; i < s.n; ++i) {
      for (int j = 0; j < s.n; ++j) {
        if (s.A.Contains(i, j)) A[offset[s.id] + i][offset[s.id] + j] = 1;
      }
    }
  }
  for (const Interconnection& c : sys.connections()) {
    for (int i = 0; i < c.E.rows(); ++i) {
      for (int j = 0; j < c.E.cols(); ++j) {
        if (c.E.Contains(i, j)) A[offset[c.to] + i][offset[c.from] + j] = 1;
      }
    }
  }
  return A;
}

Dense NaiveGlobalB(const InterconnectedSystem& sys) {
  std::vector<int> row = {0}, col = {0};
  for (const Subsystem& s : sys.subsystems()) {
    row.push_back(row.back() + s.n);
    col.push_back(col.back() + s.p);
  }
  Dense B(row.back(), std::vector<int>(col.back(), 0));
  for (const Subsystem& s : sys.subsystems()) {
    for (int i = 0; i < s.n; ++i) {
      for (int j = 0; j < s.p; ++j) {
        if (s.B.Contains(i, j)) B[row[s.id] + i][col[s.id] + j] = 1;
      }
    }
  }
  return B;
}

Dense NaiveKronecker(const Dense& lhs, const Dense& rhs) {
  const std::size_t lr = lhs.size(), lc = lr ? lhs[0].size() : 0;
  const std::size_t rr = rhs.size(), rc = rr ? rhs[0].size() : 0;
  Dense out(lr * rr, std::vector<int>(lc * rc, 0));
  for (std::size_t i = 0; i < lr; ++i) {
    for (std::size_t j = 0; j < lc; ++j) {
      for (std::size_t k = 0; k < rr; ++k) {
        for (std::size_t l = 0; l < rc; ++l) {
          out[i * rr + k][j * rc + l] = lhs[i][j] && rhs[k][l];
        }
      }
    }
  }
  return out;
}

std::vector<char> NaiveInputReached(const Dense& A, const Dense& B) {
  const std::size_t n = A.size();
  std::vector<char> reached(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int v : B[i]) {
      if (v) reached[i] = 1;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (reached[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (A[i][j] && reached[j]) {
          reached[i] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return reached;
}

bool OracleControllable(const SparsityPattern& A, const SparsityPattern& B) {
  const std::vector<char> reached = NaiveInputReached(A.ToDense(), B.ToDense());
  for (char c : reached) {
    if (!c) return false;
  }
  const int n = A.rows();
  std::vector<std::vector<int>> adj(n + B.cols());
  for (Entry e : A.entries()) adj[e.col].push_back(e.row);
  for (Entry e : B.entries()) adj[n + e.col].push_back(e.row);
  return KuhnMatching(n + B.cols(), n, adj) == n;
}

bool ExhaustiveLemma4(const InterconnectedSystem& sys) {
  for (const Subsystem& s : sys.subsystems()) {
    for (char c : NaiveInputReached(s.A.ToDense(), s.B.ToDense())) {
      if (!c) return false;
    }
  }
  const int r = sys.num_subsystems();
  std::vector<std::vector<std::vector<std::pair<int, int>>>> choices;
  for (const Subsystem& s : sys.subsystems()) {
    choices.push_back(AllMaximumMatchings(s.A));
  }
  // Global numbering: states by offset, inputs after all states.
  std::vector<int> offset = {0}, input_offset = {0};
  for (const Subsystem& s : sys.subsystems()) {
    offset.push_back(offset.back() + s.n);
    input_offset.push_back(input_offset.back() + s.p);
  }
  const int n = offset.back();
  std::vector<int> pick(r, 0);
  for (;;) {
    std::vector<char> left_used(n, 0), right_used(n, 0);
    for (int i = 0; i < r; ++i) {
      for (const auto& [l, rt] : choices[i][pick[i]]) {
        left_used[offset[i] + l] = 1;
        right_used[offset[i] + rt] = 1;
      }
    }
    // Completion graph: free states and all inputs on the left, free
    // states on the right, connection and input edges only.
    std::map<int, int> right_index;
    for (int x = 0; x < n; ++x) {
      if (!right_used[x]) right_index.emplace(x, static_cast<int>(right_index.size()));
    }
    std::vector<std::vector<int>> adj(n + input_offset.back());
    for (const Interconnection& c : sys.connections()) {
      for (Entry e : c.E.entries()) {
        const int from = offset[c.from] + e.col;
        const int to = offset[c.to] + e.row;
        if (!left_used[from] && right_index.count(to)) {
          adj[from].push_back(right_index[to]);
        }
      }
    }
    for (const Subsystem& s : sys.subsystems()) {
      for (Entry e : s.B.entries()) {
        const int to = offset[s.id] + e.row;
        if (right_index.count(to)) {
          adj[n + input_offset[s.id] + e.col].push_back(right_index[to]);
        }
      }
    }
    const int rights = static_cast<int>(right_index.size());
    if (KuhnMatching(static_cast<int>(adj.size()), rights, adj) == rights) {
      return true;
    }
    int k = 0;
    while (k < r && ++pick[k] == static_cast<int>(choices[k].size())) {
      pick[k] = 0;
      ++k;
    }
    if (k == r) return false;
  }
}

graph::BipartiteGraph RandomBipartite(int left, int right, double density,
                                      std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<graph::BipartiteEdge> edges;
  for (int l = 0; l < left; ++l) {
    for (int r = 0; r < right; ++r) {
      if (coin(rng)) edges.emplace_back(l, r);
    }
  }
  return graph::BipartiteGraph(left, right, std::move(edges));
}

}  // namespace structctl::testing
