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

#include "structctl/serial.h"

#include <string>

#include "structctl/errors.h"
#include "structctl/graph/scc.h"
#include "structctl/graphs.h"

namespace structctl::serial {

using runtime::Agent;
using runtime::As;
using runtime::Payload;
using runtime::Task;

namespace {

SerialCheck DegreeCheck(const InterconnectedSystem& sys, bool outgoing) {
  SerialCheck check;
  for (int i = 0; i < sys.num_subsystems(); ++i) {
    const auto list = outgoing ? sys.OutNeighbors(i) : sys.InNeighbors(i);
    if (list.size() > 1) check.offenders.push_back(i);
  }
  check.is_serial = check.offenders.empty();
  return check;
}

// Stacked bipartite graph of one agent: blocks of states laid out one after
// another, followed by input vertices on the left.
struct Stacked {
  std::vector<int> offset = {0};    // state offset per block, plus total
  std::vector<int> block_of;        // per left vertex, -1 for inputs
  std::vector<graph::BipartiteEdge> edges;

  int states() const { return offset.back(); }

  int AddBlock(const SparsityPattern& A) {
    const int b = static_cast<int>(offset.size()) - 1;
    const int base = offset.back();
    for (int k = 0; k < A.rows(); ++k) block_of.push_back(b);
    offset.push_back(base + A.rows());
    for (Entry e : A.entries()) edges.emplace_back(base + e.col, base + e.row);
    return b;
  }
  // Cross edges E(row, col): state col of block `from` feeds row of `to`.
  void AddCross(const SparsityPattern& E, int to, int from) {
    for (Entry e : E.entries()) {
      edges.emplace_back(offset[from] + e.col, offset[to] + e.row);
    }
  }
  // Must follow every AddBlock call.
  void AddInputs(const SparsityPattern& B, int block) {
    const int base = static_cast<int>(block_of.size());
    for (int k = 0; k < B.cols(); ++k) block_of.push_back(-1);
    for (Entry e : B.entries()) {
      edges.emplace_back(base + e.col, offset[block] + e.row);
    }
  }
  graph::BipartiteGraph Graph() const {
    return graph::BipartiteGraph(static_cast<int>(block_of.size()), states(),
                                 edges);
  }
};

// Size of the restriction of `m` to edges inside `block`.
int BlockMatched(const Stacked& s, const graph::Matching& m, int block) {
  int count = 0;
  for (int right = s.offset[block]; right < s.offset[block + 1]; ++right) {
    const int left = m.RightMate(right);
    if (left != graph::Matching::kUnmatched && s.block_of[left] == block) {
      ++count;
    }
  }
  return count;
}

int StateMatchingNumber(const SparsityPattern& A) {
  return graph::MaxMatching(StateBipartite(A)).size();
}

bool MatchedIncoming(const Agent& self,
                     const std::vector<SparsityPattern>& neighbor_A) {
  Stacked s;
  s.AddBlock(self.own().A);
  const std::vector<int>& in = self.InNeighbors();
  for (std::size_t k = 0; k < in.size(); ++k) {
    const int b = s.AddBlock(neighbor_A[k]);
    s.AddCross(self.context().incoming.at(in[k]), 0, b);
  }
  s.AddInputs(self.own().B, 0);
  const graph::Matching m =
      graph::MinWeightMaxMatching(s.Graph(), BlockWeight(s.block_of));
  for (int x = 0; x < self.own().n; ++x) {
    if (m.RightMate(x) == graph::Matching::kUnmatched) return false;
  }
  return true;
}

bool MatchedOutgoing(const Agent& self,
                     const std::vector<SparsityPattern>& neighbor_A,
                     const std::vector<SparsityPattern>& neighbor_B) {
  Stacked s;
  s.AddBlock(self.own().A);
  const std::vector<int>& out = self.OutNeighbors();
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int b = s.AddBlock(neighbor_A[k]);
    s.AddCross(self.context().outgoing.at(out[k]), b, 0);
  }
  const bool fed = !self.InNeighbors().empty();
  if (!fed) s.AddInputs(self.own().B, 0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    s.AddInputs(neighbor_B[k], static_cast<int>(k) + 1);
  }
  const graph::Matching m =
      graph::MinWeightMaxMatching(s.Graph(), BlockWeight(s.block_of));
  for (int x = fed ? self.own().n : 0; x < s.states(); ++x) {
    if (m.RightMate(x) == graph::Matching::kUnmatched) return false;
  }
  if (BlockMatched(s, m, 0) != StateMatchingNumber(self.own().A)) {
    return false;
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (BlockMatched(s, m, static_cast<int>(k) + 1) !=
        StateMatchingNumber(neighbor_A[k])) {
      return false;
    }
  }
  return true;
}

}  // namespace

SerialCheck IsSerial(const InterconnectedSystem& sys) {
  return DegreeCheck(sys, true);
}

SerialCheck IsCoSerial(const InterconnectedSystem& sys) {
  return DegreeCheck(sys, false);
}

bool LocallyReached(const Subsystem& s) {
  const graph::SccDecomposition scc =
      graph::StronglyConnectedComponents(SystemDigraph(s.A, s.B));
  for (int c : scc.non_top_linked) {
    for (int v : scc.components[c]) {
      if (v < s.n) return false;
    }
  }
  return true;
}

Lemma4Report CheckLemma4(const InterconnectedSystem& sys) {
  Lemma4Report report;
  int block_total = 0;
  for (const Subsystem& s : sys.subsystems()) {
    if (!LocallyReached(s)) report.unreached_subsystems.push_back(s.id);
    block_total += StateMatchingNumber(s.A);
  }
  const GlobalPattern g = AssembleGlobal(sys);
  const int n = sys.total_states();
  std::vector<int> block_of(n + sys.total_inputs(), -1);
  for (int x = 0; x < n; ++x) block_of[x] = sys.StateOwner(x);
  const graph::EdgeWeight weight = BlockWeight(block_of);
  const graph::Matching m =
      graph::MinWeightMaxMatching(SystemBipartite(g.A, g.B), weight);
  report.matching_fits =
      m.size() == n && graph::MatchingWeight(m, weight) == 2 * n - block_total;
  report.holds = report.matching_fits && report.unreached_subsystems.empty();
  return report;
}

graph::EdgeWeight BlockWeight(const std::vector<int>& block_of) {
  return [block_of](int left, int right) -> std::int64_t {
    return block_of[left] >= 0 && block_of[left] == block_of[right] ? 1 : 2;
  };
}

Task<SerialAgentResult> SeqStrtCtl(Agent& self, Variant variant) {
  SerialAgentResult result;
  std::vector<SparsityPattern> neighbor_A;
  std::vector<SparsityPattern> neighbor_B;
  if (variant == Variant::kIncoming) {
    for (int j : self.OutNeighbors()) self.Send(j, self.own().A);
    for (int j : self.InNeighbors()) {
      Payload p = co_await self.Recv(j);
      neighbor_A.push_back(As<SparsityPattern>(std::move(p), j));
    }
    result.matched = MatchedIncoming(self, neighbor_A);
  } else {
    for (int j : self.InNeighbors()) {
      self.Send(j, self.own().A);
      self.Send(j, self.own().B);
    }
    for (int j : self.OutNeighbors()) {
      Payload a = co_await self.Recv(j);
      neighbor_A.push_back(As<SparsityPattern>(std::move(a), j));
      Payload b = co_await self.Recv(j);
      neighbor_B.push_back(As<SparsityPattern>(std::move(b), j));
    }
    result.matched = MatchedOutgoing(self, neighbor_A, neighbor_B);
  }
  result.reached = LocallyReached(self.own());
  result.initial = result.reached && result.matched;
  self.Snapshot("seq_strt_ctl", {{"rchd", result.reached},
                                 {"mchd", result.matched},
                                 {"ctld", result.initial}});

  bool ctld = result.initial;
  for (int k = 0; k < self.r(); ++k) {
    for (int j : self.Neighbors()) self.Send(j, ctld);
    bool all = ctld;
    for (int j : self.Neighbors()) {
      Payload p = co_await self.Recv(j);
      all = As<bool>(std::move(p), j) && all;
    }
    ctld = all;
  }
  result.verdict = ctld;
  co_return result;
}

runtime::RunResult<SerialAgentResult> RunSeqStrtCtl(
    const InterconnectedSystem& sys, Variant variant) {
  const SerialCheck check =
      variant == Variant::kIncoming ? IsSerial(sys) : IsCoSerial(sys);
  if (!check.is_serial) {
    std::string names;
    for (int id : check.offenders) {
      names += (names.empty() ? "" : ", ") + std::to_string(id);
    }
    throw NotSerialError(
        std::string(variant == Variant::kIncoming
                        ? "not serial: subsystems with several outgoing "
                          "neighbors: "
                        : "subsystems with several incoming neighbors: ") +
            names,
        check.offenders);
  }
  RequireWeaklyConnected(sys);
  runtime::AgentProgram<SerialAgentResult> program = [variant](Agent& self) {
    return SeqStrtCtl(self, variant);
  };
  return runtime::Run(sys, program);
}

}  // namespace structctl::serial
