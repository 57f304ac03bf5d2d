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

#ifndef STRUCTCTL_SYSTEM_H_
#define STRUCTCTL_SYSTEM_H_

#include <span>
#include <vector>

#include "structctl/sparsity_pattern.h"

namespace structctl {

// Structure of one subsystem: x' = A x + B u with n states and p inputs.
struct Subsystem {
  int id = 0;
  int n = 0;
  int p = 0;
  SparsityPattern A;  // n x n
  SparsityPattern B;  // n x p

  friend bool operator==(const Subsystem&, const Subsystem&) = default;
};

// Coupling E (n_to x n_from): states of `from` drive states of `to`.
struct Interconnection {
  int to = 0;
  int from = 0;
  SparsityPattern E;

  friend bool operator==(const Interconnection&,
                         const Interconnection&) = default;
};

// Block-structured system. Subsystems are stored by id (ids are exactly
// 0..r-1), connections sorted by (to, from).
class InterconnectedSystem {
 public:
  InterconnectedSystem() = default;

  // Validates and normalizes. Throws DimensionError for size mismatches and
  // ValidationError for bad ids, self or duplicate connections and empty
  // connection matrices.
  static InterconnectedSystem Create(std::vector<Subsystem> subsystems,
                                     std::vector<Interconnection> connections);

  int num_subsystems() const { return static_cast<int>(subsystems_.size()); }
  const Subsystem& subsystem(int id) const { return subsystems_[id]; }
  std::span<const Subsystem> subsystems() const { return subsystems_; }
  std::span<const Interconnection> connections() const { return connections_; }

  // nullptr when there is no connection from `from` into `to`.
  const Interconnection* FindConnection(int to, int from) const;

  // Ids j with a connection j -> id (resp. id -> j), ascending.
  std::span<const int> InNeighbors(int id) const { return in_[id]; }
  std::span<const int> OutNeighbors(int id) const { return out_[id]; }
  // Union of both, ascending and without duplicates.
  std::vector<int> Neighbors(int id) const;

  int total_states() const { return state_offset_.back(); }
  int total_inputs() const { return input_offset_.back(); }
  int state_offset(int id) const { return state_offset_[id]; }
  int input_offset(int id) const { return input_offset_[id]; }

  // Subsystem owning global state index `x`.
  int StateOwner(int x) const;

  friend bool operator==(const InterconnectedSystem& a,
                         const InterconnectedSystem& b) {
    return a.subsystems_ == b.subsystems_ && a.connections_ == b.connections_;
  }

 private:
  std::vector<Subsystem> subsystems_;
  std::vector<Interconnection> connections_;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
  std::vector<int> state_offset_ = {0};
  std::vector<int> input_offset_ = {0};
};

struct GlobalPattern {
  SparsityPattern A;  // n x n, n = sum of n_i
  SparsityPattern B;  // n x p, p = sum of p_i
};

// A_i blocks on the diagonal in id order, E_{i,j} in block (i, j), B
// block-diagonal.
GlobalPattern AssembleGlobal(const InterconnectedSystem& sys);

}  // namespace structctl

#endif  // STRUCTCTL_SYSTEM_H_
