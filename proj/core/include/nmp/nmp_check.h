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

#ifndef NMP_NMP_CHECK_H_
#define NMP_NMP_CHECK_H_

#include <cstdint>
#include <string>
#include <vector>

#include "nmp/graph.h"

namespace nmp {

enum class Verdict { kHasNmp, kViolated };

std::string_view VerdictName(Verdict verdict);  // "has_nmp" / "violated"

// Proof of the answer either way. With g = gcd(k, n):
//  * kHasNmp: `multiplicity[i]` weights the i-th edge of graph.Edges(); every
//    left vertex sums to row_sum = n/g and every right vertex to col_sum = k/g.
//  * kViolated: `witness` is a left set S with k*|N(S)| < n*|S|.
struct NmpCertificate {
  Verdict verdict = Verdict::kViolated;
  std::vector<int64_t> multiplicity;
  int64_t row_sum = 0;
  int64_t col_sum = 0;
  VertexSet witness{Side::kLeft};
  int witness_neighborhood_size = 0;
};

// Exact decision through a gcd-scaled flow network: source -> x (n/g),
// x -> y (min(n/g, k/g)), y -> sink (k/g). NMP holds iff the max flow is nk/g.
// Requires k, n >= 1.
NmpCertificate CheckNmp(const BipartiteGraph& graph);

// Independent re-check of every claim in `cert`. Returns an empty string when
// the certificate is sound, otherwise a description of the first problem.
std::string ValidateCertificate(const BipartiteGraph& graph,
                                const NmpCertificate& cert);

// True iff `set` witnesses a violation on its own side:
// left S: k*|N(S)| < n*|S|; right T: n*|N(T)| < k*|T|.
bool IsViolatingWitness(const BipartiteGraph& graph, const VertexSet& set);

struct BruteforceResult {
  Verdict verdict = Verdict::kHasNmp;
  // Argmin over nonempty S of |N(S)|/|S|; ties go to the smallest |S|, then
  // to the lexicographically smallest member list. The verdict is kViolated
  // iff the minimum ratio is below n/k.
  VertexSet worst_set{Side::kLeft};
  int worst_neighborhood_size = 0;
  int64_t worst_deficiency = 0;  // k*|N(S)| - n*|S| at worst_set
};

inline constexpr int kBruteforceMaxLeft = 22;

// Enumerates all 2^k subsets of X. Requires 1 <= k <= kBruteforceMaxLeft.
BruteforceResult NmpOracleBruteforce(const BipartiteGraph& graph);

struct IndependentPair {
  VertexSet left{Side::kLeft};
  VertexSet right{Side::kRight};
};

// n*|I_X| + k*|I_Y| <= n*k. Fails with kInvalidArgument if the pair is not
// independent in `graph`.
bool KleitmanIndependentCheck(const BipartiteGraph& graph,
                              const IndependentPair& pair);

// Given T on the right with n*|N(T)| < k*|T|, returns S = X \ N(T), which
// satisfies k*|N(S)| < n*|S|.
VertexSet WitnessTransfer(const BipartiteGraph& graph, const VertexSet& right);

}  // namespace nmp

#endif  // NMP_NMP_CHECK_H_
