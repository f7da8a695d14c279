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

#ifndef NMP_GRAPH_H_
#define NMP_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nmp {

// X is the left side (size k), Y the right side (size n).
enum class Side { kLeft, kRight };

constexpr Side Opposite(Side side) {
  return side == Side::kLeft ? Side::kRight : Side::kLeft;
}

std::string_view SideName(Side side);

struct Edge {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free set of vertex indices on one side.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(Side side) : side_(side) {}

  // Sorts `members`; duplicates are an ErrorCode::kInvalidArgument failure.
  VertexSet(Side side, std::vector<int> members);

  Side side() const { return side_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool Contains(int v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  Side side_ = Side::kLeft;
  std::vector<int> members_;
};

// Immutable bipartite graph with compressed adjacency in both directions.
// Neighbor lists are sorted ascending.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Fails with kInvalidArgument on negative sizes, out-of-range endpoints or
  // duplicate edges.
  BipartiteGraph(int k, int n, std::vector<Edge> edges);

  static BipartiteGraph Complete(int k, int n);

  int left_size() const { return k_; }
  int right_size() const { return n_; }
  int SideSize(Side side) const { return side == Side::kLeft ? k_ : n_; }
  int64_t edge_count() const { return static_cast<int64_t>(left_adj_.size()); }

  std::span<const int> LeftNeighbors(int x) const;
  std::span<const int> RightNeighbors(int y) const;
  std::span<const int> Neighbors(Side side, int v) const {
    return side == Side::kLeft ? LeftNeighbors(v) : RightNeighbors(v);
  }
  int Degree(Side side, int v) const {
    return static_cast<int>(Neighbors(side, v).size());
  }
  bool HasEdge(int x, int y) const;

  // Edges sorted by (x, y).
  std::vector<Edge> Edges() const;

  // Same graph with X and Y exchanged.
  BipartiteGraph SwapSides() const;

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.left_offsets_ == b.left_offsets_ &&
           a.left_adj_ == b.left_adj_;
  }

 private:
  int k_ = 0;
  int n_ = 0;
  std::vector<int64_t> left_offsets_{0};
  std::vector<int> left_adj_;
  std::vector<int64_t> right_offsets_{0};
  std::vector<int> right_adj_;
};

// Line-oriented text format:
//   # comment
//   p bipartite <k> <n>
//   e <x> <y>          (0 <= x < k, 0 <= y < n)
// Errors carry the 1-based line number and use ErrorCode::kFormat.
BipartiteGraph ParseGraph(std::string_view text);
BipartiteGraph ReadGraphFile(const std::string& path);

// Header, then edges sorted by (x, y). Each comment is emitted as "# <line>"
// before the header.
std::string SerializeGraph(const BipartiteGraph& graph,
                           std::span<const std::string> comments = {});
void WriteGraphFile(const std::string& path, const BipartiteGraph& graph,
                    std::span<const std::string> comments = {});

VertexSet AllVertices(const BipartiteGraph& graph, Side side);
VertexSet Complement(const BipartiteGraph& graph, const VertexSet& set);

// Fails with kInvalidArgument if some member is outside the side's range.
void CheckInRange(const BipartiteGraph& graph, const VertexSet& set);

// N(S) on the side opposite to S.
VertexSet Neighborhood(const BipartiteGraph& graph, const VertexSet& set);

// e(A, B) for A on the left and B on the right.
int64_t EdgeCountBetween(const BipartiteGraph& graph, const VertexSet& left,
                         const VertexSet& right);

struct InducedSubgraph {
  BipartiteGraph graph;
  // New index -> original index, ascending.
  std::vector<int> left_map;
  std::vector<int> right_map;
};

// G(A, B), reindexed in ascending original order.
InducedSubgraph Induce(const BipartiteGraph& graph, const VertexSet& left,
                       const VertexSet& right);

// Vertex-disjoint union; the i-th part occupies the next block of indices on
// each side.
BipartiteGraph DisjointUnion(std::span<const BipartiteGraph> parts);

bool IsConnected(const BipartiteGraph& graph);

}  // namespace nmp

#endif  // NMP_GRAPH_H_
