// Copyright 2026 The NMP Authors.
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

#include "nmp/flow.h"

#include <algorithm>
#include <limits>

#include "nmp/error.h"

namespace nmp {

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : source_(source), sink_(sink), first_out_(node_count, -1) {
  Require(node_count >= 2, "flow network needs at least two nodes");
  Require(source >= 0 && source < node_count && sink >= 0 && sink < node_count &&
              source != sink,
          "invalid source/sink");
}

int FlowNetwork::AddArc(int tail, int head, int64_t capacity) {
  Require(tail >= 0 && tail < node_count() && head >= 0 && head < node_count(),
          "arc endpoint out of range");
  Require(capacity >= 0, "arc capacity must be nonnegative");
  Require(head != source_, "source may not have incoming arcs");
  Require(tail != sink_, "sink may not have outgoing arcs");
  int id = arc_count();
  head_.push_back(head);
  next_.push_back(first_out_[tail]);
  capacity_.push_back(capacity);
  residual_.push_back(capacity);
  first_out_[tail] = 2 * id;
  head_.push_back(tail);
  next_.push_back(first_out_[head]);
  capacity_.push_back(0);
  residual_.push_back(0);
  first_out_[head] = 2 * id + 1;
  return id;
}

bool FlowNetwork::BuildLevels() {
  level_.assign(node_count(), -1);
  std::vector<int> queue;
  queue.reserve(node_count());
  queue.push_back(source_);
  level_[source_] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    int v = queue[i];
    for (int a = first_out_[v]; a != -1; a = next_[a]) {
      if (residual_[a] > 0 && level_[head_[a]] < 0) {
        level_[head_[a]] = level_[v] + 1;
        queue.push_back(head_[a]);
      }
    }
  }
  return level_[sink_] >= 0;
}

int64_t FlowNetwork::BlockingFlow() {
  current_ = first_out_;
  int64_t total = 0;
  std::vector<int> path;  // arc ids from the source
  int v = source_;
  for (;;) {
    if (v == sink_) {
      int64_t push = std::numeric_limits<int64_t>::max();
      for (int a : path) push = std::min(push, residual_[a]);
      size_t cut = path.size();
      for (size_t i = 0; i < path.size(); ++i) {
        residual_[path[i]] -= push;
        residual_[path[i] ^ 1] += push;
        if (residual_[path[i]] == 0 && cut == path.size()) cut = i;
      }
      total += push;
      path.resize(cut);
      v = path.empty() ? source_ : head_[path.back()];
      continue;
    }
    int& a = current_[v];
    while (a != -1 && !(residual_[a] > 0 && level_[head_[a]] == level_[v] + 1)) {
      a = next_[a];
    }
    if (a != -1) {
      path.push_back(a);
      v = head_[a];
      continue;
    }
    // Dead end: retreat.
    level_[v] = -1;
    if (path.empty()) break;
    int back = path.back();
    path.pop_back();
    v = head_[back ^ 1];
    current_[v] = next_[current_[v]];
  }
  return total;
}

int64_t FlowNetwork::MaxFlow() {
  residual_ = capacity_;
  int64_t total = 0;
  while (BuildLevels()) total += BlockingFlow();
  return total;
}

std::vector<char> FlowNetwork::MinCutSourceSide() const {
  std::vector<char> seen(node_count(), 0);
  std::vector<int> stack{source_};
  seen[source_] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int a = first_out_[v]; a != -1; a = next_[a]) {
      if (residual_[a] > 0 && !seen[head_[a]]) {
        seen[head_[a]] = 1;
        stack.push_back(head_[a]);
      }
    }
  }
  return seen;
}

}  // namespace nmp
