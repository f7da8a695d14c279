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

#ifndef NMP_DECOMPOSE_H_
#define NMP_DECOMPOSE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "nmp/euclid.h"
#include "nmp/graph.h"

namespace nmp {

// A greedy maximal q-thrill in G(U, V). `a` and `b` are the unspanned parts of
// U (left) and V (right); the anchors of the thrill lie on `anchor_side`.
struct ThrillExtraction {
  Side anchor_side = Side::kLeft;
  int q = 1;
  Thrill thrill;
  VertexSet a{Side::kLeft};
  VertexSet b{Side::kRight};
};

// Anchors are visited in ascending order; an anchor with at least q unused
// neighbors on the leaf side claims the q smallest. Requires |V| = q|U| when
// anchors are on the left and |U| = q|V| when they are on the right.
ThrillExtraction ExtractThrill(const BipartiteGraph& graph, const VertexSet& u,
                               const VertexSet& v, int q, Side anchor_side);

struct StageRecord {
  int index = 1;
  Side anchor_side = Side::kLeft;
  int q = 1;
  int pool_size = 0;     // anchors available
  int padding_size = 0;  // |S_i|, fresh leaf-side vertices discarded up front
  int a_size = 0;        // unspanned left vertices of the extraction
  int b_size = 0;        // unspanned right vertices of the extraction
  int corrupt_copy_count = 0;
  int corrupt_x_size = 0;
  int corrupt_y_size = 0;
  int64_t d_x = 0;  // cumulative deletions after this stage
  int64_t d_y = 0;
  bool premise_ok = false;  // extraction sizes within the d0 premises
};

struct DecompositionTrace {
  EuclidSchedule schedule;
  int block_size = 1;  // gcd(k, n)
  int ell = 1;
  int L = 1;
  double d0 = 0.0;  // 2 * eps * max(k, n)
  std::vector<StageRecord> stages;
  VertexSet d_x{Side::kLeft};
  VertexSet d_y{Side::kRight};
  TreeFactor factor;  // host indices
  bool premises_hold = false;
  bool size_bound_holds = false;  // |D_X| <= ell*m*d0 and |D_Y| <= L*m*d0
};

// Builds a T_{ell,L}-factor on G minus (D_X, D_Y), with ell = k/g, L = n/g.
// Recurrences, per-stage conservation and the ratio identity are asserted
// internally (kInternal on failure). kDomain when nothing survives.
DecompositionTrace EuclidFactorDecompose(const BipartiteGraph& graph, double eps);

// Rewrites a factor given in `sub`'s parent indices into `sub.graph` indices.
TreeFactor ReindexFactor(const TreeFactor& factor, const InducedSubgraph& sub);

enum class ApproxMode { kAuto, kCaseA, kCaseB, kDirect };
enum class ApproxCase { kA, kB, kDirect };

struct CaseBParams {
  double alpha = 0.0;
  double eta = 0.0;
  int width = 0;  // floor(alpha*n), the common divisor of K and N
  int K = 0;
  int N = 0;
  int ell = 0;
  int L = 0;
};

struct ApproxResult {
  ApproxCase which = ApproxCase::kA;
  VertexSet x_hat{Side::kLeft};
  VertexSet y_hat{Side::kRight};
  double f_hat = 0.0;  // |x_hat| / k
  double g_hat = 0.0;  // |y_hat| / n
  std::optional<CaseBParams> case_b;
  std::optional<DecompositionTrace> trace;
  TreeFactor factor;  // host indices
  bool factor_verified = false;
  bool remainder_nmp_verified = false;
};

// Deletes (x_hat, y_hat) so the rest has NMP. Auto picks case (a) iff
// n > k/sqrt(eps); direct skips the trimming and decomposes G as is.
// Requires 0 < eps < 1.
ApproxResult ApproxNmp(const BipartiteGraph& graph, double eps, ApproxMode mode);

}  // namespace nmp

#endif  // NMP_DECOMPOSE_H_
