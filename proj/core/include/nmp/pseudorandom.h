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

#ifndef NMP_PSEUDORANDOM_H_
#define NMP_PSEUDORANDOM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmp/graph.h"
#include "nmp/rational.h"

namespace nmp {

bool IsPrime(int64_t value);

// Smallest generator of the multiplicative group of F_q. q must be prime.
int64_t PrimitiveRoot(int64_t q);

// The d-th powers in F_q^*, sorted: the subgroup of order (q-1)/d.
std::vector<int64_t> PowerResidues(int64_t q, int64_t d);

// Each pair (x, y), visited in (x, y) order, is kept with probability p.
BipartiteGraph GenGnp(int k, int n, double p, uint64_t seed);

// Vertex subset of F_q: every element, or an explicit list.
struct SubsetSpec {
  bool all = true;
  std::vector<int64_t> elements;
};

// Left vertex i is the i-th smallest element of X (likewise for Y); x ~ y iff
// x + y is a d-th power residue.
BipartiteGraph GenSumCayley(int64_t q, int64_t d, const SubsetSpec& x_spec,
                            const SubsetSpec& y_spec);

// Points (left) and lines (right) of PG(2, q). Representatives are normalized
// so the first nonzero coordinate is 1 and are listed as (1,a,b) by (a,b),
// then (0,1,b) by b, then (0,0,1).
BipartiteGraph GenPg2(int64_t q);

struct PseudoParams {
  Rational p;
  Rational eps;
};

struct PseudoReport {
  int min_left_degree = 0;
  int max_codegree = 0;
  std::pair<int, int> max_codegree_pair{-1, -1};
  bool degree_ok = false;
  bool codegree_ok = false;
  bool pass = false;
  std::optional<int> violating_vertex;
  std::optional<std::pair<int, int>> violating_pair;
  std::optional<PseudoParams> estimated;
  std::vector<std::string> warnings;
};

// Every left degree >= p*n and every left codegree <= (1+eps)*p^2*n, both
// compared exactly. Requires k >= 2, 0 < p <= 1 and eps >= 0.
PseudoReport VerifyThomason(const BipartiteGraph& graph,
                            const PseudoParams& params);

// p = (min left degree)/n, eps = max(0, max codegree * n / mindeg^2 - 1).
// Requires k >= 2 and no isolated left vertex.
PseudoParams EstimateThomasonParams(const BipartiteGraph& graph);

enum class BoundForm { kThomason, kAlonBourgain };

struct MixingOptions {
  BoundForm form = BoundForm::kThomason;
  int64_t samples = 1000;
  uint64_t seed = 0;
  // Alon-Bourgain form only: field size q and subgroup size |H|.
  int64_t field_q = 0;
  int64_t h_size = 0;
};

struct MixingCheck {
  int a = 0;
  int b = 0;
  int64_t edges = 0;
  double deviation = 0.0;  // |e(A,B) - expected|
  double bound = 0.0;
  bool ok = true;
};

struct MixingAuditReport {
  int64_t samples = 0;
  int64_t violations = 0;
  // Largest deviation/bound seen, and the pair achieving it.
  double worst_ratio = 0.0;
  MixingCheck worst;
};

// Evaluates one pair exactly. Thomason form: |e - p*a*b| <= sqrt(p*n*a*b*(1 +
// eps*p*a)). Alon-Bourgain form: |e - a*b*|H|/q| < sqrt(q*a*b).
MixingCheck CheckMixingPair(const BipartiteGraph& graph,
                            const PseudoParams& params,
                            const MixingOptions& options, const VertexSet& a,
                            const VertexSet& b);

// Sample i uses its own stream DeriveSeed(seed, i). Thomason form requires
// VerifyThomason to pass and draws |A| uniformly from [ceil(1/p), k].
MixingAuditReport MixingAudit(const BipartiteGraph& graph,
                              const PseudoParams& params,
                              const MixingOptions& options);

struct RobustDeleteOptions {
  Rational p0;
  Rational eps0;
  Rational eps;
  int d = 0;  // |C_Y|
  uint64_t seed = 0;
  int max_attempts = 100;
};

struct RobustDeleteResult {
  VertexSet c_x{Side::kLeft};
  VertexSet c_y{Side::kRight};
  Rational p1;
  Rational eps1;
  int attempts = 0;
  double threshold_t = 0.0;
  double bad_bound = 0.0;  // 2k exp(-2 t^2 D)
  double eta = 0.0;        // 2 exp(-(49/64)/eps)
  bool eta_bound_applies = false;
  PseudoReport reverify;
  std::vector<std::string> warnings;
};

// Deletes a random D-subset of Y together with the left vertices whose degree
// into it is too high. Preconditions (kInvalidArgument): 0 < eps < 1/2,
// p0^2 * k >= 1, eps^3*n/2 <= D <= eps^3*n, (p0, eps0) verifies. Fails with
// kResourceExhausted when max_attempts samples are all rejected.
RobustDeleteResult RobustDelete(const BipartiteGraph& graph,
                                const RobustDeleteOptions& options);

}  // namespace nmp

#endif  // NMP_PSEUDORANDOM_H_
