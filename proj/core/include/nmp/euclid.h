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

#ifndef NMP_EUCLID_H_
#define NMP_EUCLID_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nmp/graph.h"

namespace nmp {

// Remainder ladder of the Euclidean algorithm on coprime (ell, L).
// r[0] = 0, r[1] = 1, ..., r[m] = min(ell, L), r[m+1] = max(ell, L), and
// r[i+1] = q[i]*r[i] + r[i-1] for 1 <= i <= m. q[0] is unused and set to 0.
struct EuclidSchedule {
  int ell = 1;
  int L = 1;
  int m = 1;
  std::vector<int64_t> r;
  std::vector<int64_t> q;
  // Side of size r[m]. Left when ell <= L.
  Side small_side = Side::kLeft;
};

// Fails with kInvalidArgument unless ell, L >= 1 and gcd(ell, L) = 1.
EuclidSchedule ComputeEuclidSchedule(int ell, int L);

// 2.078 * ln(max_side) + 0.6723.
double EuclidComplexityBound(int64_t max_side);

// Side that carries the fan centers at stage i (1-based). The last stage is
// anchored on the small side and sides alternate going backwards.
Side StageAnchorSide(const EuclidSchedule& schedule, int stage);

struct EuclideanTree {
  int ell = 1;
  int L = 1;
  BipartiteGraph graph;
};

// The left-right tree built by peeling matchings off the larger side.
EuclideanTree BuildEuclideanTree(int ell, int L);

struct Fan {
  Side anchor_side = Side::kLeft;
  int anchor = 0;
  std::vector<int> leaves;
};

// Vertex-disjoint fans centered on one side, all with the same leaf count.
struct Thrill {
  Side anchor_side = Side::kLeft;
  int q = 0;
  std::vector<Fan> fans;
};

// Empty string when the thrill is well formed, otherwise the problem.
std::string ValidateThrill(const Thrill& thrill);

struct TreeStage {
  int index = 1;
  Thrill thrill;  // fans added at this stage, in tree coordinates
  EuclideanTree tree;
};

// T_1 (a star) through T_m; each stage adds a q_i-thrill on alternating sides.
// Anchor a at stage i gets leaves r[i-1] + a + j*r[i] for j < q[i].
std::vector<TreeStage> RunTreeProcess(int ell, int L);

// Side-preserving isomorphism test for two trees given as bipartite graphs.
bool AreIsomorphicTrees(const BipartiteGraph& a, const BipartiteGraph& b);

// One copy of T_{ell,L} inside a host graph.
struct TreeCopy {
  VertexSet left{Side::kLeft};
  VertexSet right{Side::kRight};
  std::vector<Edge> edges;  // host indices
  // Canonical position -> host vertex. Either both empty or sizes ell and L.
  std::vector<int> left_map;
  std::vector<int> right_map;
};

struct TreeFactor {
  int ell = 1;
  int L = 1;
  std::vector<TreeCopy> copies;
};

struct FactorReport {
  bool ok = true;
  std::vector<std::string> diagnostics;
};

// Checks disjointness, host edge membership, per-copy side-preserving
// isomorphism with T_{ell,L} and, when requested, that the copies span G.
FactorReport VerifyTreeFactor(const BipartiteGraph& graph,
                              const TreeFactor& factor, int ell, int L,
                              bool require_spanning);

// Lines of the form "copy <id>: X <indices> | Y <indices>".
std::string SerializeFactor(const TreeFactor& factor);

}  // namespace nmp

#endif  // NMP_EUCLID_H_
