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

#ifndef NMP_FLOW_H_
#define NMP_FLOW_H_

#include <cstdint>
#include <vector>

namespace nmp {

// Directed network with 64-bit integer capacities, solved with Dinic's
// blocking-flow algorithm. The source may not receive arcs and the sink may
// not emit them.
class FlowNetwork {
 public:
  FlowNetwork(int node_count, int source, int sink);

  // Returns the arc id.
  int AddArc(int tail, int head, int64_t capacity);

  // Computes a maximum flow from scratch and returns its value.
  int64_t MaxFlow();

  int node_count() const { return static_cast<int>(first_out_.size()); }
  int arc_count() const { return static_cast<int>(head_.size() / 2); }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int64_t capacity(int arc) const { return capacity_[2 * arc]; }
  int64_t flow(int arc) const { return capacity_[2 * arc] - residual_[2 * arc]; }

  // After MaxFlow: nodes reachable from the source in the residual network.
  // This is the source side of a minimum cut.
  std::vector<char> MinCutSourceSide() const;

 private:
  bool BuildLevels();
  int64_t BlockingFlow();

  int source_;
  int sink_;
  // Arc 2i is the forward copy of user arc i, 2i+1 its reverse.
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int64_t> capacity_;
  std::vector<int64_t> residual_;
  std::vector<int> first_out_;
  std::vector<int> level_;
  std::vector<int> current_;
};

}  // namespace nmp

#endif  // NMP_FLOW_H_
