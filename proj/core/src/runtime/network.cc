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

#include "structctl/runtime/network.h"

#include <algorithm>
#include <sstream>

#include "structctl/errors.h"

namespace structctl::runtime {

using nlohmann::json;

AgentContext MakeContext(const InterconnectedSystem& sys, int id) {
  AgentContext ctx;
  ctx.id = id;
  ctx.r = sys.num_subsystems();
  ctx.own = sys.subsystem(id);
  for (int j : sys.InNeighbors(id)) {
    ctx.incoming.emplace(j, sys.FindConnection(id, j)->E);
  }
  for (int j : sys.OutNeighbors(id)) {
    ctx.outgoing.emplace(j, sys.FindConnection(j, id)->E);
  }
  return ctx;
}

std::string Trace::MessagesJsonl() const {
  std::string out;
  for (const Message& m : messages) {
    json line = json::object();
    line["round"] = m.round;
    line["from"] = m.from;
    line["to"] = m.to;
    line["payload"] = PayloadToJson(m.payload);
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string Trace::SnapshotsJsonl() const {
  std::string out;
  for (const Snapshot& s : snapshots) {
    json line = json::object();
    line["round"] = s.round;
    line["agent"] = s.agent;
    line["tag"] = s.tag;
    line["state"] = s.state;
    out += line.dump();
    out += '\n';
  }
  return out;
}

Agent::Agent(Network* net, AgentContext context)
    : net_(net), context_(std::move(context)) {
  for (const auto& [j, e] : context_.incoming) in_.push_back(j);
  for (const auto& [j, e] : context_.outgoing) out_.push_back(j);
  std::set_union(in_.begin(), in_.end(), out_.begin(), out_.end(),
                 std::back_inserter(all_));
}

int Agent::round() const { return net_->round_; }

void Agent::Send(int to, Payload payload) {
  if (!std::binary_search(all_.begin(), all_.end(), to)) {
    throw ProtocolError("agent " + std::to_string(id()) +
                        " sent to non-neighbor " + std::to_string(to));
  }
  const std::size_t items = PayloadSize(payload);
  RunStats& stats = net_->stats_;
  ++stats.messages;
  stats.payload_items += static_cast<std::int64_t>(items);
  stats.max_payload_items = std::max(stats.max_payload_items, items);
  net_->trace_.messages.push_back({net_->round_, id(), to, payload});
  net_->outbox_.push_back({net_->round_, id(), to, std::move(payload)});
}

void Agent::Snapshot(std::string tag, json state) {
  net_->trace_.snapshots.push_back(
      {net_->round_, id(), std::move(tag), std::move(state)});
}

bool Agent::RecvAwaiter::await_ready() {
  if (!agent->net_->Deliverable(from, agent->id())) return false;
  agent->received_ = agent->net_->Pop(from, agent->id());
  return true;
}

void Agent::RecvAwaiter::await_suspend(std::coroutine_handle<> h) {
  agent->blocked_ = h;
  agent->waiting_for_ = from;
}

Payload Agent::RecvAwaiter::await_resume() {
  Payload p = std::move(*agent->received_);
  agent->received_.reset();
  return p;
}

Network::Network(const InterconnectedSystem& sys, RunOptions options)
    : options_(options) {
  for (int i = 0; i < sys.num_subsystems(); ++i) {
    agents_.push_back(
        std::unique_ptr<Agent>(new Agent(this, MakeContext(sys, i))));
  }
}

bool Network::Deliverable(int from, int to) const {
  auto it = mailbox_.find({from, to});
  return it != mailbox_.end() && !it->second.empty();
}

Payload Network::Pop(int from, int to) {
  std::deque<Payload>& box = mailbox_[{from, to}];
  Payload p = std::move(box.front());
  box.pop_front();
  return p;
}

void Network::RunAll(std::vector<Task<void>>& roots) {
  const int n = size();
  std::vector<char> started(n, 0);
  for (round_ = 0;; ++round_) {
    if (round_ >= options_.max_rounds) {
      throw ProtocolError("run exceeded " +
                          std::to_string(options_.max_rounds) + " rounds");
    }
    bool progress = false;
    for (int i = 0; i < n; ++i) {
      auto handle = roots[i].handle();
      if (handle.done()) continue;
      Agent& a = *agents_[i];
      if (!started[i]) {
        started[i] = 1;
        progress = true;
        handle.resume();
      } else if (a.blocked_ && Deliverable(a.waiting_for_, i)) {
        a.received_ = Pop(a.waiting_for_, i);
        std::coroutine_handle<> leaf = std::exchange(a.blocked_, {});
        a.waiting_for_ = -1;
        progress = true;
        leaf.resume();
      }
      if (handle.done() && handle.promise().error) {
        std::rethrow_exception(handle.promise().error);
      }
    }

    const bool delivered = !outbox_.empty();
    for (Message& m : outbox_) {
      mailbox_[{m.from, m.to}].push_back(std::move(m.payload));
    }
    outbox_.clear();

    const bool all_done = std::all_of(
        roots.begin(), roots.end(),
        [](const Task<void>& t) { return t.handle().done(); });
    if (all_done) {
      stats_.rounds = round_ + 1;
      return;
    }
    if (!progress && !delivered) {
      std::vector<int> blocked;
      std::ostringstream os;
      os << "deadlock in round " << round_ << ":";
      for (int i = 0; i < n; ++i) {
        if (roots[i].handle().done()) continue;
        blocked.push_back(i);
        os << " agent " << i << " waits for agent " << agents_[i]->waiting_for_
           << ";";
      }
      throw DeadlockError(os.str(), std::move(blocked));
    }
  }
}

}  // namespace structctl::runtime
