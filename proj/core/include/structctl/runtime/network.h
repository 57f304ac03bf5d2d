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

// Synchronous message-passing simulator. One agent per subsystem runs a
// coroutine program; Send is buffered and delivered at the end of the round,
// Recv(j) suspends until a message from j is available. Agents are resumed
// in ascending id order, so runs are deterministic.
//
//   Task<bool> Program(Agent& self) {
//     for (int j : self.Neighbors()) self.Send(j, true);
//     bool all = true;
//     for (int j : self.Neighbors()) {
//       Payload p = co_await self.Recv(j);
//       all = all && As<bool>(std::move(p), j);
//     }
//     co_return all;
//   }

#ifndef STRUCTCTL_RUNTIME_NETWORK_H_
#define STRUCTCTL_RUNTIME_NETWORK_H_

#include <coroutine>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "structctl/runtime/payload.h"
#include "structctl/runtime/task.h"
#include "structctl/system.h"

namespace structctl::runtime {

// Everything an agent may know before communicating: its own subsystem,
// the connection matrices that touch it and the number of subsystems.
struct AgentContext {
  int id = 0;
  int r = 0;
  Subsystem own;
  std::map<int, SparsityPattern> incoming;  // j -> E_{id,j}
  std::map<int, SparsityPattern> outgoing;  // j -> E_{j,id}
};

AgentContext MakeContext(const InterconnectedSystem& sys, int id);

struct Message {
  int round = 0;
  int from = 0;
  int to = 0;
  Payload payload;
};

struct Snapshot {
  int round = 0;
  int agent = 0;
  std::string tag;
  nlohmann::json state;
};

struct Trace {
  std::vector<Message> messages;
  std::vector<Snapshot> snapshots;

  // One {"round","from","to","payload"} object per line.
  std::string MessagesJsonl() const;
  // One {"round","agent","tag","state"} object per line.
  std::string SnapshotsJsonl() const;
};

struct RunStats {
  int rounds = 0;
  std::int64_t messages = 0;
  std::int64_t payload_items = 0;
  std::size_t max_payload_items = 0;
};

class Network;

class Agent {
 public:
  int id() const { return context_.id; }
  int r() const { return context_.r; }
  const AgentContext& context() const { return context_; }
  const Subsystem& own() const { return context_.own; }

  // Ids j feeding this agent (E_{id,j} nonzero), ascending.
  const std::vector<int>& InNeighbors() const { return in_; }
  // Ids j fed by this agent (E_{j,id} nonzero), ascending.
  const std::vector<int>& OutNeighbors() const { return out_; }
  const std::vector<int>& Neighbors() const { return all_; }

  // Current round, starting at 0.
  int round() const;

  // Buffered until the end of the round. Throws ProtocolError when `to` is
  // not a neighbor.
  void Send(int to, Payload payload);

  struct RecvAwaiter {
    Agent* agent;
    int from;
    bool await_ready();
    void await_suspend(std::coroutine_handle<> h);
    Payload await_resume();
  };
  // Waits for the oldest undelivered message from `from`.
  RecvAwaiter Recv(int from) { return {this, from}; }

  // Records a state snapshot in the trace.
  void Snapshot(std::string tag, nlohmann::json state);

 private:
  friend class Network;
  friend struct RecvAwaiter;

  Agent(Network* net, AgentContext context);

  Network* net_;
  AgentContext context_;
  std::vector<int> in_;
  std::vector<int> out_;
  std::vector<int> all_;
  std::coroutine_handle<> blocked_;
  int waiting_for_ = -1;
  std::optional<Payload> received_;
};

struct RunOptions {
  // Guards against livelock in buggy programs.
  int max_rounds = 1'000'000;
};

// Owns the agents and drives them round by round.
class Network {
 public:
  Network(const InterconnectedSystem& sys, RunOptions options = {});
  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;

  int size() const { return static_cast<int>(agents_.size()); }
  Agent& agent(int id) { return *agents_[id]; }

  // Runs one root task per agent to completion. Rethrows the first agent
  // exception (lowest id); throws DeadlockError when unfinished agents all
  // wait for messages that can never arrive.
  void RunAll(std::vector<Task<void>>& roots);

  const Trace& trace() const { return trace_; }
  Trace TakeTrace() { return std::move(trace_); }
  const RunStats& stats() const { return stats_; }

 private:
  friend class Agent;

  bool Deliverable(int from, int to) const;
  Payload Pop(int from, int to);

  std::vector<std::unique_ptr<Agent>> agents_;
  RunOptions options_;
  int round_ = 0;
  // mailbox_[{from, to}] holds delivered messages in send order.
  std::map<std::pair<int, int>, std::deque<Payload>> mailbox_;
  std::vector<Message> outbox_;
  Trace trace_;
  RunStats stats_;
};

template <typename Out>
struct RunResult {
  std::vector<Out> outputs;  // by agent id
  Trace trace;
  RunStats stats;
};

template <typename Out>
using AgentProgram = std::function<Task<Out>(Agent&)>;

namespace internal {

template <typename Out>
Task<void> Collect(const AgentProgram<Out>* program, Agent* agent,
                   std::optional<Out>* slot) {
  Task<Out> body = (*program)(*agent);
  slot->emplace(co_await body);
}

}  // namespace internal

// Runs `program` on every subsystem of `sys`.
template <typename Out>
RunResult<Out> Run(const InterconnectedSystem& sys,
                   const AgentProgram<Out>& program, RunOptions options = {}) {
  Network net(sys, options);
  std::vector<std::optional<Out>> slots(net.size());
  std::vector<Task<void>> roots;
  roots.reserve(net.size());
  for (int i = 0; i < net.size(); ++i) {
    roots.push_back(internal::Collect<Out>(&program, &net.agent(i), &slots[i]));
  }
  net.RunAll(roots);
  RunResult<Out> result;
  for (auto& slot : slots) result.outputs.push_back(std::move(*slot));
  result.stats = net.stats();
  result.trace = net.TakeTrace();
  return result;
}

}  // namespace structctl::runtime

#endif  // STRUCTCTL_RUNTIME_NETWORK_H_
