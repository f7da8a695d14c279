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

#include "nmp/euclid.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "nmp/error.h"

namespace nmp {
namespace {

constexpr size_t kMaxDiagnostics = 64;

// Interns rooted, side-labelled subtree shapes as small integers.
class ShapeTable {
 public:
  int Intern(std::vector<int> key) {
    auto [it, inserted] = ids_.emplace(std::move(key), static_cast<int>(ids_.size()));
    return it->second;
  }

 private:
  std::map<std::vector<int>, int> ids_;
};

struct PlainTree {
  std::vector<std::vector<int>> adj;
  std::vector<int> side;  // 0 left, 1 right
};

PlainTree ToPlain(const BipartiteGraph& g) {
  const int k = g.left_size();
  PlainTree t;
  t.adj.resize(k + g.right_size());
  t.side.assign(k + g.right_size(), 1);
  std::fill(t.side.begin(), t.side.begin() + k, 0);
  for (int x = 0; x < k; ++x) {
    for (int y : g.LeftNeighbors(x)) {
      t.adj[x].push_back(k + y);
      t.adj[k + y].push_back(x);
    }
  }
  return t;
}

std::vector<int> Centers(const PlainTree& t) {
  const int n = static_cast<int>(t.adj.size());
  if (n <= 2) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  std::vector<int> degree(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(t.adj[v].size());
    if (degree[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : t.adj[v]) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

int RootedShape(const PlainTree& t, int root, ShapeTable& table) {
  const int n = static_cast<int>(t.adj.size());
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<char> seen(n, 0);
  std::vector<int> stack{root};
  seen[root] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : t.adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::vector<int>> child_ids(n);
  std::vector<int> id(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    std::vector<int>& kids = child_ids[v];
    std::sort(kids.begin(), kids.end());
    kids.insert(kids.begin(), t.side[v]);
    id[v] = table.Intern(std::move(kids));
    if (parent[v] >= 0) child_ids[parent[v]].push_back(id[v]);
  }
  return id[root];
}

bool IsTree(const BipartiteGraph& g) {
  return g.edge_count() + 1 == int64_t{g.left_size()} + g.right_size() &&
         IsConnected(g);
}

std::string VertexName(Side side, int v) {
  return (side == Side::kLeft ? "x" : "y") + std::to_string(v);
}

}  // namespace

EuclidSchedule ComputeEuclidSchedule(int ell, int L) {
  Require(ell >= 1 && L >= 1, "tree sides must be positive");
  Require(std::gcd(ell, L) == 1, "T_{ell,L} needs coprime sides; gcd(" +
                                     std::to_string(ell) + ", " +
                                     std::to_string(L) + ") = " +
                                     std::to_string(std::gcd(ell, L)));
  EuclidSchedule s;
  s.ell = ell;
  s.L = L;
  s.small_side = ell <= L ? Side::kLeft : Side::kRight;
  std::vector<int64_t> down{std::max(ell, L), std::min(ell, L)};
  while (down.back() != 1) {
    down.push_back(down[down.size() - 2] % down.back());
  }
  s.r.push_back(0);
  s.r.insert(s.r.end(), down.rbegin(), down.rend());
  s.m = static_cast<int>(s.r.size()) - 2;
  s.q.assign(s.m + 1, 0);
  for (int i = 1; i <= s.m; ++i) s.q[i] = (s.r[i + 1] - s.r[i - 1]) / s.r[i];
  return s;
}

double EuclidComplexityBound(int64_t max_side) {
  return 2.078 * std::log(static_cast<double>(max_side)) + 0.6723;
}

Side StageAnchorSide(const EuclidSchedule& schedule, int stage) {
  Require(stage >= 1 && stage <= schedule.m, "stage out of range");
  return (schedule.m - stage) % 2 == 0 ? schedule.small_side
                                       : Opposite(schedule.small_side);
}

EuclideanTree BuildEuclideanTree(int ell, int L) {
  ComputeEuclidSchedule(ell, L);
  std::vector<Edge> edges;
  edges.reserve(ell + L - 1);
  int a = ell;
  int b = L;
  while (true) {
    if (a == 1) {
      for (int y = 0; y < b; ++y) edges.push_back({0, y});
      break;
    }
    if (b == 1) {
      for (int x = 0; x < a; ++x) edges.push_back({x, 0});
      break;
    }
    if (a < b) {
      for (int i = 0; i < a; ++i) edges.push_back({i, i + b - a});
      b -= a;
    } else {
      for (int i = 0; i < b; ++i) edges.push_back({i + a - b, i});
      a -= b;
    }
  }
  return {ell, L, BipartiteGraph(ell, L, std::move(edges))};
}

std::string ValidateThrill(const Thrill& thrill) {
  std::vector<int> anchors, leaves;
  for (size_t i = 0; i < thrill.fans.size(); ++i) {
    const Fan& fan = thrill.fans[i];
    if (fan.anchor_side != thrill.anchor_side) {
      return "fan " + std::to_string(i) + " is anchored on the wrong side";
    }
    if (static_cast<int>(fan.leaves.size()) != thrill.q) {
      return "fan " + std::to_string(i) + " has " +
             std::to_string(fan.leaves.size()) + " leaves, expected " +
             std::to_string(thrill.q);
    }
    anchors.push_back(fan.anchor);
    leaves.insert(leaves.end(), fan.leaves.begin(), fan.leaves.end());
  }
  std::sort(anchors.begin(), anchors.end());
  std::sort(leaves.begin(), leaves.end());
  if (std::adjacent_find(anchors.begin(), anchors.end()) != anchors.end()) {
    return "two fans share an anchor";
  }
  auto dup = std::adjacent_find(leaves.begin(), leaves.end());
  if (dup != leaves.end()) {
    return "leaf " + VertexName(Opposite(thrill.anchor_side), *dup) +
           " is in two fans";
  }
  return "";
}

std::vector<TreeStage> RunTreeProcess(int ell, int L) {
  const EuclidSchedule s = ComputeEuclidSchedule(ell, L);
  std::vector<TreeStage> stages;
  std::vector<Edge> edges;
  for (int i = 1; i <= s.m; ++i) {
    const Side anchor_side = StageAnchorSide(s, i);
    TreeStage stage;
    stage.index = i;
    stage.thrill.anchor_side = anchor_side;
    stage.thrill.q = static_cast<int>(s.q[i]);
    for (int64_t a = 0; a < s.r[i]; ++a) {
      Fan fan{anchor_side, static_cast<int>(a), {}};
      for (int64_t j = 0; j < s.q[i]; ++j) {
        int leaf = static_cast<int>(s.r[i - 1] + a + j * s.r[i]);
        fan.leaves.push_back(leaf);
        edges.push_back(anchor_side == Side::kLeft ? Edge{fan.anchor, leaf}
                                                   : Edge{leaf, fan.anchor});
      }
      stage.thrill.fans.push_back(std::move(fan));
    }
    const int anchors = static_cast<int>(s.r[i]);
    const int others = static_cast<int>(s.r[i + 1]);
    const int left = anchor_side == Side::kLeft ? anchors : others;
    const int right = anchor_side == Side::kLeft ? others : anchors;
    stage.tree = {left, right, BipartiteGraph(left, right, edges)};
    stages.push_back(std::move(stage));
  }
  return stages;
}

bool AreIsomorphicTrees(const BipartiteGraph& a, const BipartiteGraph& b) {
  if (a.left_size() != b.left_size() || a.right_size() != b.right_size() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  if (!IsTree(a) || !IsTree(b)) return false;
  PlainTree ta = ToPlain(a);
  PlainTree tb = ToPlain(b);
  ShapeTable table;
  std::vector<int> shapes_a;
  for (int c : Centers(ta)) shapes_a.push_back(RootedShape(ta, c, table));
  for (int c : Centers(tb)) {
    int shape = RootedShape(tb, c, table);
    if (std::find(shapes_a.begin(), shapes_a.end(), shape) != shapes_a.end()) {
      return true;
    }
  }
  return false;
}

FactorReport VerifyTreeFactor(const BipartiteGraph& graph,
                              const TreeFactor& factor, int ell, int L,
                              bool require_spanning) {
  FactorReport report;
  size_t dropped = 0;
  auto fail = [&](std::string message) {
    report.ok = false;
    if (report.diagnostics.size() < kMaxDiagnostics) {
      report.diagnostics.push_back(std::move(message));
    } else {
      ++dropped;
    }
  };
  if (factor.ell != ell || factor.L != L) {
    fail("factor is labelled T_{" + std::to_string(factor.ell) + "," +
         std::to_string(factor.L) + "}, expected T_{" + std::to_string(ell) +
         "," + std::to_string(L) + "}");
  }
  if (ell < 1 || L < 1 || std::gcd(ell, L) != 1) {
    fail("T_{" + std::to_string(ell) + "," + std::to_string(L) +
         "} is undefined: sides must be positive and coprime");
    return report;
  }
  const BipartiteGraph canonical = BuildEuclideanTree(ell, L).graph;
  const std::vector<Edge> canonical_edges = canonical.Edges();
  std::vector<int> owner_left(graph.left_size(), -1);
  std::vector<int> owner_right(graph.right_size(), -1);

  for (size_t c = 0; c < factor.copies.size(); ++c) {
    const TreeCopy& copy = factor.copies[c];
    const std::string tag = "copy " + std::to_string(c);
    if (copy.left.side() != Side::kLeft || copy.right.side() != Side::kRight) {
      fail(tag + ": vertex sets are on the wrong sides");
      continue;
    }
    if (copy.left.size() != ell || copy.right.size() != L) {
      fail(tag + ": has " + std::to_string(copy.left.size()) + " left and " +
           std::to_string(copy.right.size()) + " right vertices");
      continue;
    }
    bool in_range = true;
    for (int x : copy.left) in_range &= x >= 0 && x < graph.left_size();
    for (int y : copy.right) in_range &= y >= 0 && y < graph.right_size();
    if (!in_range) {
      fail(tag + ": vertex index outside the host graph");
      continue;
    }
    for (int x : copy.left) {
      if (owner_left[x] >= 0) {
        fail("vertex x" + std::to_string(x) + " is shared by copies " +
             std::to_string(owner_left[x]) + " and " + std::to_string(c));
      } else {
        owner_left[x] = static_cast<int>(c);
      }
    }
    for (int y : copy.right) {
      if (owner_right[y] >= 0) {
        fail("vertex y" + std::to_string(y) + " is shared by copies " +
             std::to_string(owner_right[y]) + " and " + std::to_string(c));
      } else {
        owner_right[y] = static_cast<int>(c);
      }
    }
    if (static_cast<int64_t>(copy.edges.size()) != int64_t{ell} + L - 1) {
      fail(tag + ": has " + std::to_string(copy.edges.size()) +
           " edges, expected " + std::to_string(ell + L - 1));
      continue;
    }
    const auto& lm = copy.left.members();
    const auto& rm = copy.right.members();
    std::vector<Edge> local;
    bool edges_ok = true;
    for (const Edge& e : copy.edges) {
      auto xi = std::lower_bound(lm.begin(), lm.end(), e.x);
      auto yi = std::lower_bound(rm.begin(), rm.end(), e.y);
      if (xi == lm.end() || *xi != e.x || yi == rm.end() || *yi != e.y) {
        fail(tag + ": edge (x" + std::to_string(e.x) + ", y" +
             std::to_string(e.y) + ") leaves the copy");
        edges_ok = false;
        continue;
      }
      if (!graph.HasEdge(e.x, e.y)) {
        fail(tag + ": edge (x" + std::to_string(e.x) + ", y" +
             std::to_string(e.y) + ") is not in the host graph");
        edges_ok = false;
      }
      local.push_back({static_cast<int>(xi - lm.begin()),
                       static_cast<int>(yi - rm.begin())});
    }
    if (!edges_ok) continue;
    std::sort(local.begin(), local.end());
    if (std::adjacent_find(local.begin(), local.end()) != local.end()) {
      fail(tag + ": repeated edge");
      continue;
    }
    BipartiteGraph shape(ell, L, local);
    if (!AreIsomorphicTrees(shape, canonical)) {
      fail(tag + ": not isomorphic to T_{" + std::to_string(ell) + "," +
           std::to_string(L) + "}");
      continue;
    }
    if (copy.left_map.empty() && copy.right_map.empty()) continue;
    if (static_cast<int>(copy.left_map.size()) != ell ||
        static_cast<int>(copy.right_map.size()) != L) {
      fail(tag + ": isomorphism map has the wrong size");
      continue;
    }
    std::vector<int> lsorted = copy.left_map, rsorted = copy.right_map;
    std::sort(lsorted.begin(), lsorted.end());
    std::sort(rsorted.begin(), rsorted.end());
    if (lsorted != lm || rsorted != rm) {
      fail(tag + ": isomorphism map is not a bijection onto the copy");
      continue;
    }
    std::vector<Edge> sorted_edges = copy.edges;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    for (const Edge& e : canonical_edges) {
      Edge image{copy.left_map[e.x], copy.right_map[e.y]};
      if (!std::binary_search(sorted_edges.begin(), sorted_edges.end(), image)) {
        fail(tag + ": isomorphism map sends canonical edge (x" +
             std::to_string(e.x) + ", y" + std::to_string(e.y) +
             ") to a non-edge");
        break;
      }
    }
  }
  if (require_spanning) {
    int uncovered_left = 0, uncovered_right = 0;
    int first_left = -1, first_right = -1;
    for (int x = 0; x < graph.left_size(); ++x) {
      if (owner_left[x] < 0 && uncovered_left++ == 0) first_left = x;
    }
    for (int y = 0; y < graph.right_size(); ++y) {
      if (owner_right[y] < 0 && uncovered_right++ == 0) first_right = y;
    }
    if (uncovered_left + uncovered_right > 0) {
      std::string msg = "not spanning: " + std::to_string(uncovered_left) +
                        " left and " + std::to_string(uncovered_right) +
                        " right vertices uncovered";
      if (first_left >= 0) msg += ", first x" + std::to_string(first_left);
      if (first_right >= 0) msg += ", first y" + std::to_string(first_right);
      fail(msg);
    }
  }
  if (dropped > 0) {
    report.diagnostics.push_back("... " + std::to_string(dropped) +
                                 " more problems");
  }
  return report;
}

std::string SerializeFactor(const TreeFactor& factor) {
  std::ostringstream out;
  out << "# T_{" << factor.ell << "," << factor.L << "}-factor, "
      << factor.copies.size() << " copies\n";
  for (size_t c = 0; c < factor.copies.size(); ++c) {
    out << "copy " << c << ": X";
    for (int x : factor.copies[c].left) out << ' ' << x;
    out << " | Y";
    for (int y : factor.copies[c].right) out << ' ' << y;
    out << '\n';
  }
  return out.str();
}

}  // namespace nmp
