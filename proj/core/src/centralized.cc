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

#include "structctl/centralized.h"

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "structctl/errors.h"
#include "structctl/graph/decomposition.h"
#include "structctl/graph/digraph.h"
#include "structctl/graph/scc.h"
#include "structctl/graphs.h"

namespace structctl::centralized {

const char* CriterionName(Criterion c) {
  switch (c) {
    case Criterion::kReachabilityAndMatching:
      return "reachability+matching";
    case Criterion::kInputCacti:
      return "input-cacti";
    case Criterion::kSccAndMatching:
      return "scc+matching";
  }
  return "unknown";
}

namespace {

std::vector<int> Inputs(int n, int p) {
  std::vector<int> inputs(p);
  for (int k = 0; k < p; ++k) inputs[k] = n + k;
  return inputs;
}

// Fills matching, reachability and (on failure) the violation of `v`.
void Analyze(const SparsityPattern& A, const SparsityPattern& B, Verdict& v) {
  const int n = A.rows();
  const graph::Digraph g = SystemDigraph(A, B);
  const graph::BipartiteGraph b = SystemBipartite(A, B);
  v.matching = graph::MaxMatching(b);
  v.reach_parent = graph::BfsParents(g, Inputs(n, B.cols()));

  Violation violation;
  for (int x = 0; x < n; ++x) {
    if (v.reach_parent[x] == -2) violation.unreached.push_back(x);
  }
  if (violation.unreached.empty() && v.matching.size() < n) {
    graph::HallViolator hall = graph::FindHallViolator(b, v.matching);
    violation.deficient = std::move(hall.rights);
    violation.deficient_neighbors = std::move(hall.neighbors);
  }
  v.controllable = v.matching.size() == n && violation.unreached.empty();
  if (!v.controllable) v.violation = std::move(violation);
}

}  // namespace

Verdict Verify(const SparsityPattern& A, const SparsityPattern& B) {
  Verdict v;
  v.criterion = Criterion::kReachabilityAndMatching;
  Analyze(A, B, v);
  return v;
}

Verdict VerifyViaScc(const SparsityPattern& A, const SparsityPattern& B) {
  Verdict v;
  v.criterion = Criterion::kSccAndMatching;
  Analyze(A, B, v);
  const int n = A.rows();
  const graph::SccDecomposition scc =
      graph::StronglyConnectedComponents(SystemDigraph(A, B));
  bool sources_are_inputs = true;
  for (int c : scc.non_top_linked) {
    for (int vertex : scc.components[c]) {
      if (vertex < n) sources_are_inputs = false;
    }
  }
  v.controllable = sources_are_inputs && v.matching.size() == n;
  if (v.controllable) v.violation.reset();
  return v;
}

Verdict VerifyViaCacti(const SparsityPattern& A, const SparsityPattern& B) {
  Verdict v;
  v.criterion = Criterion::kInputCacti;
  Analyze(A, B, v);
  const int n = A.rows();
  const int p = B.cols();
  if (v.matching.size() < n) {
    v.controllable = false;
    return v;
  }

  const graph::Digraph g = SystemDigraph(A, B);
  graph::Matching lifted(n + p, n + p);
  for (const auto& [l, r] : v.matching.Edges()) lifted.Add(l, r);
  graph::PathCycleDecomposition parts =
      graph::DecomposePathsAndCycles(g, lifted);

  // Right-perfect on states: every path starts at an input.
  std::vector<int> cactus_of(n + p, -1);
  std::vector<Cactus> cacti;
  for (std::vector<int>& path : parts.paths) {
    const int id = static_cast<int>(cacti.size());
    for (int vertex : path) cactus_of[vertex] = id;
    cacti.push_back({std::move(path), {}});
  }
  std::vector<std::vector<int>> pending = std::move(parts.cycles);
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    std::vector<std::vector<int>> still;
    for (std::vector<int>& cycle : pending) {
      int host = -1;
      int from = -1;
      int entry = -1;
      for (std::size_t k = 0; k < cycle.size() && host < 0; ++k) {
        for (int tail : g.InNeighbors(cycle[k])) {
          if (cactus_of[tail] >= 0) {
            host = cactus_of[tail];
            from = tail;
            entry = static_cast<int>(k);
            break;
          }
        }
      }
      if (host < 0) {
        still.push_back(std::move(cycle));
        continue;
      }
      std::rotate(cycle.begin(), cycle.begin() + entry, cycle.end());
      for (int vertex : cycle) cactus_of[vertex] = host;
      cacti[host].buds.push_back({from, std::move(cycle)});
      progress = true;
    }
    pending = std::move(still);
  }
  v.controllable = pending.empty();
  if (v.controllable) {
    v.cacti = std::move(cacti);
    v.violation.reset();
  }
  return v;
}

std::string CheckCacti(const SparsityPattern& A, const SparsityPattern& B,
                       const std::vector<Cactus>& cacti) {
  const int n = A.rows();
  const int p = B.cols();
  const graph::Digraph g = SystemDigraph(A, B);
  std::vector<char> used(n + p, 0);
  auto claim = [&](int vertex) -> bool {
    if (vertex < 0 || vertex >= n + p || used[vertex]) return false;
    used[vertex] = 1;
    return true;
  };
  for (std::size_t c = 0; c < cacti.size(); ++c) {
    const Cactus& cactus = cacti[c];
    const std::string where = "cactus " + std::to_string(c) + ": ";
    if (cactus.stem.empty() || cactus.stem.front() < n) {
      return where + "stem does not start at an input";
    }
    for (std::size_t k = 0; k < cactus.stem.size(); ++k) {
      if (!claim(cactus.stem[k])) return where + "stem vertex reused";
      if (k > 0 && !g.HasArc(cactus.stem[k - 1], cactus.stem[k])) {
        return where + "stem uses a missing arc";
      }
    }
    std::set<int> members(cactus.stem.begin(), cactus.stem.end());
    for (const Cactus::Bud& bud : cactus.buds) {
      if (bud.cycle.empty()) return where + "empty bud";
      if (!members.contains(bud.attach_from) ||
          !g.HasArc(bud.attach_from, bud.cycle.front())) {
        return where + "bud not attached by an arc from the cactus";
      }
      for (std::size_t k = 0; k < bud.cycle.size(); ++k) {
        if (!claim(bud.cycle[k])) return where + "bud vertex reused";
        const int next = bud.cycle[(k + 1) % bud.cycle.size()];
        if (!g.HasArc(bud.cycle[k], next)) {
          return where + "bud cycle uses a missing arc";
        }
      }
      members.insert(bud.cycle.begin(), bud.cycle.end());
    }
  }
  for (int x = 0; x < n; ++x) {
    if (!used[x]) return "state " + std::to_string(x) + " not spanned";
  }
  return "";
}

std::string CheckVerdict(const SparsityPattern& A, const SparsityPattern& B,
                         const Verdict& v) {
  const int n = A.rows();
  const int p = B.cols();
  if (v.controllable) {
    // Matching: distinct endpoints over existing arcs, every state covered.
    std::vector<char> left_used(n + p, 0);
    std::vector<char> right_used(n, 0);
    for (const auto& [l, r] : v.matching.Edges()) {
      const bool arc = l < n ? A.Contains(r, l) : B.Contains(r, l - n);
      if (!arc || left_used[l] || right_used[r]) {
        return "matching edge (" + std::to_string(l) + ", " +
               std::to_string(r) + ") invalid";
      }
      left_used[l] = right_used[r] = 1;
    }
    for (int x = 0; x < n; ++x) {
      if (!right_used[x]) return "state " + std::to_string(x) + " unmatched";
    }
    // Reachability: parent chains end at an input and use existing arcs.
    if (static_cast<int>(v.reach_parent.size()) != n + p) {
      return "reachability witness has wrong size";
    }
    for (int x = 0; x < n; ++x) {
      int cur = x;
      for (int steps = 0; cur < n; ++steps) {
        const int parent = v.reach_parent[cur];
        if (parent < 0 || steps > n) {
          return "no input path to state " + std::to_string(x);
        }
        const bool arc = parent < n ? A.Contains(cur, parent)
                                    : B.Contains(cur, parent - n);
        if (!arc) return "reachability witness uses a missing arc";
        cur = parent;
      }
    }
    if (v.criterion == Criterion::kInputCacti) return CheckCacti(A, B, v.cacti);
    return "";
  }

  if (!v.violation) return "negative verdict without a violation";
  const Violation& w = *v.violation;
  if (!w.unreached.empty()) {
    const std::vector<int> reached =
        InputReachable(SystemDigraph(A, B), n);
    for (int x : w.unreached) {
      if (std::binary_search(reached.begin(), reached.end(), x)) {
        return "state " + std::to_string(x) + " is reachable after all";
      }
    }
    return "";
  }
  // Hall deficiency: the true left neighborhood is strictly smaller.
  std::set<int> neighborhood;
  for (Entry e : A.entries()) {
    if (std::binary_search(w.deficient.begin(), w.deficient.end(), e.row)) {
      neighborhood.insert(e.col);
    }
  }
  for (Entry e : B.entries()) {
    if (std::binary_search(w.deficient.begin(), w.deficient.end(), e.row)) {
      neighborhood.insert(n + e.col);
    }
  }
  if (w.deficient.empty() || neighborhood.size() >= w.deficient.size()) {
    return "deficient set is not a Hall violator";
  }
  return "";
}

namespace {

// Dimension of the controllable subspace of (a, b).
int ControllableDimension(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                          double tolerance) {
  const int n = static_cast<int>(a.rows());
  Eigen::MatrixXd basis(n, 0);
  std::vector<Eigen::VectorXd> frontier;
  for (int k = 0; k < b.cols(); ++k) frontier.push_back(b.col(k));
  while (!frontier.empty() && basis.cols() < n) {
    std::vector<Eigen::VectorXd> added;
    for (Eigen::VectorXd v : frontier) {
      const double scale = v.norm();
      if (scale == 0.0) continue;
      for (int pass = 0; pass < 2; ++pass) {
        v -= basis * (basis.transpose() * v);
      }
      if (v.norm() <= tolerance * scale) continue;
      v.normalize();
      basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
      basis.col(basis.cols() - 1) = v;
      added.push_back(v);
      if (basis.cols() == n) break;
    }
    frontier.clear();
    for (const Eigen::VectorXd& v : added) frontier.push_back(a * v);
  }
  return static_cast<int>(basis.cols());
}

}  // namespace

bool NumericProbe(const SparsityPattern& A, const SparsityPattern& B,
                  std::uint64_t seed, const ProbeOptions& options) {
  const int n = A.rows();
  if (n > options.max_states) {
    throw PreconditionError("numeric probe limited to " +
                            std::to_string(options.max_states) + " states");
  }
  if (A.cols() != n || B.rows() != n) {
    throw DimensionError("numeric probe: incompatible A and B");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> magnitude(0.5, 1.5);
  std::bernoulli_distribution negative(0.5);
  auto draw = [&] { return negative(rng) ? -magnitude(rng) : magnitude(rng); };
  for (int trial = 0; trial < options.trials; ++trial) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, B.cols());
    for (Entry e : A.entries()) a(e.row, e.col) = draw();
    for (Entry e : B.entries()) b(e.row, e.col) = draw();
    if (ControllableDimension(a, b, options.tolerance) == n) return true;
  }
  return false;
}

}  // namespace structctl::centralized
