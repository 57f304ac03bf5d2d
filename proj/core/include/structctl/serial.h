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

#ifndef STRUCTCTL_SERIAL_H_
#define STRUCTCTL_SERIAL_H_

#include <vector>

#include "structctl/graph/matching.h"
#include "structctl/runtime/network.h"
#include "structctl/system.h"

namespace structctl::serial {

struct SerialCheck {
  bool is_serial = true;
  std::vector<int> offenders;  // subsystems feeding more than one other
};

SerialCheck IsSerial(const InterconnectedSystem& sys);

// Same test on in-degrees: every subsystem is fed by at most one other.
SerialCheck IsCoSerial(const InterconnectedSystem& sys);

// Subsystem-local reachability: no state of D(A_i, B_i) lies in a source
// SCC of that digraph.
bool LocallyReached(const Subsystem& s);

// Sufficient condition for structural controllability assembled from
// subsystem-level matchings: every subsystem is locally reached, and some
// choice of maximum matchings M_i of B(A_i) can be completed to a matching
// without right-unmatched states by cross edges leaving left-unmatched
// states of other subsystems and by input edges.
struct Lemma4Report {
  bool holds = false;
  std::vector<int> unreached_subsystems;
  bool matching_fits = false;
};

// Decided exactly: a global matching whose restriction to every A_i block
// is maximum and which covers every state exists iff the min-weight
// maximum matching of B(A, B), with weight 1 on A_i edges and 2 on every
// other edge, has size n and weight 2n - sum_i nu(A_i).
Lemma4Report CheckLemma4(const InterconnectedSystem& sys);

// The weight used by SeqStrtCtl on an agent's stacked graph: 1 when both
// endpoints lie in the same block, 2 otherwise (always 2 for inputs).
// `block_of` maps left vertices of the stacked graph to their block, with
// -1 for inputs; right vertex k lies in block_of[k].
graph::EdgeWeight BlockWeight(const std::vector<int>& block_of);

struct SerialAgentResult {
  bool reached = false;   // rchd before consensus
  bool matched = false;   // mchd before consensus
  bool initial = false;   // rchd and mchd
  bool verdict = false;   // after r consensus rounds
};

enum class Variant {
  // Each agent stacks its incoming neighbors' blocks (serial systems).
  kIncoming,
  // Each agent stacks its outgoing neighbors' blocks (systems in which every
  // subsystem has at most one incoming neighbor).
  kOutgoing,
};

// Agent program. Validation (serial shape, weak connectivity) happens in
// RunSeqStrtCtl; the program itself trusts its context.
runtime::Task<SerialAgentResult> SeqStrtCtl(runtime::Agent& self,
                                            Variant variant);

// Throws NotSerialError naming offenders for the wrong topology and
// ValidationError when the condensed graph is not weakly connected.
runtime::RunResult<SerialAgentResult> RunSeqStrtCtl(
    const InterconnectedSystem& sys, Variant variant = Variant::kIncoming);

}  // namespace structctl::serial

#endif  // STRUCTCTL_SERIAL_H_
