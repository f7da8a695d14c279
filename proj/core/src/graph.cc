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

#include "nmp/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nmp/error.h"

namespace nmp {
namespace {

void BuildCsr(int rows, const std::vector<std::pair<int, int>>& sorted_pairs,
              std::vector<int64_t>& offsets, std::vector<int>& adj) {
  offsets.assign(rows + 1, 0);
  adj.resize(sorted_pairs.size());
  for (const auto& [row, col] : sorted_pairs) ++offsets[row + 1];
  for (int i = 0; i < rows; ++i) offsets[i + 1] += offsets[i];
  for (size_t i = 0; i < sorted_pairs.size(); ++i) adj[i] = sorted_pairs[i].second;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void ParseError(int line, const std::string& what) {
  Fail(ErrorCode::kFormat, "line " + std::to_string(line) + ": " + what);
}

int ParseIndex(std::string_view token, int line, const char* what) {
  int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 ||
      value > INT32_MAX) {
    ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return static_cast<int>(value);
}

}  // namespace

std::string_view SideName(Side side) {
  return side == Side::kLeft ? "left" : "right";
}

VertexSet::VertexSet(Side side, std::vector<int> members)
    : side_(side), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  Require(std::adjacent_find(members_.begin(), members_.end()) == members_.end(),
          "vertex set contains a duplicate index");
}

bool VertexSet::Contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

BipartiteGraph::BipartiteGraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
  Require(k >= 0 && n >= 0, "graph side sizes must be nonnegative");
  std::vector<std::pair<int, int>> by_left;
  by_left.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.x < 0 || e.x >= k || e.y < 0 || e.y >= n) {
      Fail(ErrorCode::kInvalidArgument,
           "edge (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
               ") out of range for k=" + std::to_string(k) +
               ", n=" + std::to_string(n));
    }
    by_left.emplace_back(e.x, e.y);
  }
  std::sort(by_left.begin(), by_left.end());
  auto dup = std::adjacent_find(by_left.begin(), by_left.end());
  if (dup != by_left.end()) {
    Fail(ErrorCode::kInvalidArgument, "duplicate edge (" +
                                          std::to_string(dup->first) + ", " +
                                          std::to_string(dup->second) + ")");
  }
  BuildCsr(k, by_left, left_offsets_, left_adj_);
  std::vector<std::pair<int, int>> by_right;
  by_right.reserve(by_left.size());
  for (const auto& [x, y] : by_left) by_right.emplace_back(y, x);
  std::sort(by_right.begin(), by_right.end());
  BuildCsr(n, by_right, right_offsets_, right_adj_);
}

BipartiteGraph BipartiteGraph::Complete(int k, int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(k) * n);
  for (int x = 0; x < k; ++x) {
    for (int y = 0; y < n; ++y) edges.push_back({x, y});
  }
  return BipartiteGraph(k, n, std::move(edges));
}

std::span<const int> BipartiteGraph::LeftNeighbors(int x) const {
  return {left_adj_.data() + left_offsets_[x],
          static_cast<size_t>(left_offsets_[x + 1] - left_offsets_[x])};
}

std::span<const int> BipartiteGraph::RightNeighbors(int y) const {
  return {right_adj_.data() + right_offsets_[y],
          static_cast<size_t>(right_offsets_[y + 1] - right_offsets_[y])};
}

bool BipartiteGraph::HasEdge(int x, int y) const {
  if (x < 0 || x >= k_ || y < 0 || y >= n_) return false;
  auto nbrs = LeftNeighbors(x);
  return std::binary_search(nbrs.begin(), nbrs.end(), y);
}

std::vector<Edge> BipartiteGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(left_adj_.size());
  for (int x = 0; x < k_; ++x) {
    for (int y : LeftNeighbors(x)) out.push_back({x, y});
  }
  return out;
}

BipartiteGraph BipartiteGraph::SwapSides() const {
  std::vector<Edge> edges;
  edges.reserve(left_adj_.size());
  for (int x = 0; x < k_; ++x) {
    for (int y : LeftNeighbors(x)) edges.push_back({y, x});
  }
  return BipartiteGraph(n_, k_, std::move(edges));
}

BipartiteGraph ParseGraph(std::string_view text) {
  bool have_header = false;
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = Trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto tok = Tokens(line);
    if (tok[0] == "p") {
      if (have_header) ParseError(line_no, "second header line");
      if (tok.size() != 4 || tok[1] != "bipartite") {
        ParseError(line_no, "malformed header, expected 'p bipartite <k> <n>'");
      }
      k = ParseIndex(tok[2], line_no, "left size");
      n = ParseIndex(tok[3], line_no, "right size");
      have_header = true;
    } else if (tok[0] == "e") {
      if (!have_header) ParseError(line_no, "edge before header");
      if (tok.size() != 3) ParseError(line_no, "malformed edge, expected 'e <x> <y>'");
      int x = ParseIndex(tok[1], line_no, "left index");
      int y = ParseIndex(tok[2], line_no, "right index");
      if (x >= k) {
        ParseError(line_no, "left index " + std::to_string(x) +
                                " >= k=" + std::to_string(k));
      }
      if (y >= n) {
        ParseError(line_no, "right index " + std::to_string(y) +
                                " >= n=" + std::to_string(n));
      }
      edges.push_back({x, y});
      edge_lines.push_back(line_no);
    } else {
      ParseError(line_no, "unrecognized line '" + std::string(line) + "'");
    }
  }
  if (!have_header) ParseError(line_no, "missing header 'p bipartite <k> <n>'");

  std::vector<size_t> order(edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return edges[a] < edges[b]; });
  for (size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const Edge& e = edges[order[i]];
      ParseError(edge_lines[order[i]],
                 "duplicate edge " + std::to_string(e.x) + " " + std::to_string(e.y) +
                     " (first seen on line " +
                     std::to_string(edge_lines[order[i - 1]]) + ")");
    }
  }
  return BipartiteGraph(k, n, std::move(edges));
}

BipartiteGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorCode::kFormat, "cannot open graph file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseGraph(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string SerializeGraph(const BipartiteGraph& graph,
                           std::span<const std::string> comments) {
  std::string out;
  out.reserve(32 + graph.edge_count() * 12);
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += "p bipartite " + std::to_string(graph.left_size()) + " " +
         std::to_string(graph.right_size()) + "\n";
  for (int x = 0; x < graph.left_size(); ++x) {
    for (int y : graph.LeftNeighbors(x)) {
      out += "e ";
      out += std::to_string(x);
      out += ' ';
      out += std::to_string(y);
      out += '\n';
    }
  }
  return out;
}

void WriteGraphFile(const std::string& path, const BipartiteGraph& graph,
                    std::span<const std::string> comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail(ErrorCode::kFormat, "cannot write graph file '" + path + "'");
  out << SerializeGraph(graph, comments);
}

VertexSet AllVertices(const BipartiteGraph& graph, Side side) {
  std::vector<int> members(graph.SideSize(side));
  for (int i = 0; i < graph.SideSize(side); ++i) members[i] = i;
  return VertexSet(side, std::move(members));
}

VertexSet Complement(const BipartiteGraph& graph, const VertexSet& set) {
  std::vector<int> members;
  auto it = set.begin();
  for (int v = 0; v < graph.SideSize(set.side()); ++v) {
    if (it != set.end() && *it == v) {
      ++it;
    } else {
      members.push_back(v);
    }
  }
  return VertexSet(set.side(), std::move(members));
}

void CheckInRange(const BipartiteGraph& graph, const VertexSet& set) {
  if (set.empty()) return;
  Require(set.members().front() >= 0 &&
              set.members().back() < graph.SideSize(set.side()),
          std::string(SideName(set.side())) + " vertex index out of range");
}

VertexSet Neighborhood(const BipartiteGraph& graph, const VertexSet& set) {
  CheckInRange(graph, set);
  Side other = Opposite(set.side());
  std::vector<char> mark(graph.SideSize(other), 0);
  for (int v : set) {
    for (int w : graph.Neighbors(set.side(), v)) mark[w] = 1;
  }
  std::vector<int> members;
  for (int w = 0; w < graph.SideSize(other); ++w) {
    if (mark[w]) members.push_back(w);
  }
  return VertexSet(other, std::move(members));
}

int64_t EdgeCountBetween(const BipartiteGraph& graph, const VertexSet& left,
                         const VertexSet& right) {
  Require(left.side() == Side::kLeft && right.side() == Side::kRight,
          "EdgeCountBetween expects (left set, right set)");
  CheckInRange(graph, left);
  CheckInRange(graph, right);
  std::vector<char> in_right(graph.right_size(), 0);
  for (int y : right) in_right[y] = 1;
  int64_t count = 0;
  for (int x : left) {
    for (int y : graph.LeftNeighbors(x)) count += in_right[y];
  }
  return count;
}

InducedSubgraph Induce(const BipartiteGraph& graph, const VertexSet& left,
                       const VertexSet& right) {
  Require(left.side() == Side::kLeft && right.side() == Side::kRight,
          "Induce expects (left set, right set)");
  CheckInRange(graph, left);
  CheckInRange(graph, right);
  InducedSubgraph out;
  out.left_map = left.members();
  out.right_map = right.members();
  std::vector<int> right_index(graph.right_size(), -1);
  for (int i = 0; i < right.size(); ++i) right_index[out.right_map[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < left.size(); ++i) {
    for (int y : graph.LeftNeighbors(out.left_map[i])) {
      if (right_index[y] >= 0) edges.push_back({i, right_index[y]});
    }
  }
  out.graph = BipartiteGraph(left.size(), right.size(), std::move(edges));
  return out;
}

BipartiteGraph DisjointUnion(std::span<const BipartiteGraph> parts) {
  int k = 0;
  int n = 0;
  std::vector<Edge> edges;
  for (const BipartiteGraph& part : parts) {
    for (const Edge& e : part.Edges()) edges.push_back({e.x + k, e.y + n});
    k += part.left_size();
    n += part.right_size();
  }
  return BipartiteGraph(k, n, std::move(edges));
}

bool IsConnected(const BipartiteGraph& graph) {
  const int k = graph.left_size();
  const int total = k + graph.right_size();
  if (total == 0) return true;
  std::vector<char> seen(total, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    bool is_left = v < k;
    auto nbrs = is_left ? graph.LeftNeighbors(v) : graph.RightNeighbors(v - k);
    for (int w : nbrs) {
      int id = is_left ? w + k : w;
      if (!seen[id]) {
        seen[id] = 1;
        ++reached;
        stack.push_back(id);
      }
    }
  }
  return reached == total;
}

}  // namespace nmp
