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

#ifndef NMP_HARNESS_H_
#define NMP_HARNESS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nmp/graph.h"
#include "nmp/rational.h"

namespace nmp {

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

// Wilson score interval; z = 1.959964 gives 95%.
WilsonInterval Wilson(int64_t successes, int64_t trials, double z = 1.959964);

// Either p_grid or c_grid is used (p_grid wins when both are set); a c value
// stands for p = c * ln(n) / k.
struct SweepConfig {
  int k = 0;
  int n = 0;
  std::vector<double> p_grid;
  std::vector<double> c_grid;
  int trials = 1;
  uint64_t master_seed = 0;
  int threads = 1;
};

struct SweepRow {
  double p = 0.0;
  double c = 0.0;  // p * k / ln(n)
  int trials = 0;
  int successes = 0;
  double phat = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 1.0;
};

// Trial j at every grid point samples G(k, n, p) from DeriveSeed(seed, j), so
// the graphs at different p are coupled and each trial is monotone in p.
// The result does not depend on `threads`.
std::vector<SweepRow> ThresholdSweep(const SweepConfig& config);

// Comment line with tool version, generator id and seed, then the column
// header p,c,trials,successes,phat,wilson_lo,wilson_hi and one line per row.
std::string FormatSweepCsv(const SweepConfig& config,
                           const std::vector<SweepRow>& rows);

// Rows x columns grid over {0, *}, stored row-major.
struct StarArray {
  int rows = 0;
  int cols = 0;
  std::vector<char> star;
  bool IsStar(int r, int c) const { return star[static_cast<size_t>(r) * cols + c] != 0; }
};

// One line per row made of '0' and '*'; blank lines and '#' comments are
// skipped. kFormat errors name the offending line.
StarArray ParseStarArray(std::string_view text);

// Row x is adjacent to column y when cell (x, y) is a star.
BipartiteGraph StarArrayGraph(const StarArray& array);

struct StarSolution {
  bool feasible = false;
  std::vector<int64_t> fill;  // row-major, only when feasible
  int64_t row_sum = 0;
  int64_t col_sum = 0;
  VertexSet witness_rows{Side::kLeft};      // only when infeasible
  VertexSet witness_columns{Side::kRight};  // their star columns
};

StarSolution SolveStarArray(const StarArray& array);

// Independent re-check of a solution; empty string when it holds.
std::string ValidateStarSolution(const StarArray& array,
                                 const StarSolution& solution);

// Feasible: the filled grid, then "R=<R> C=<C>". Infeasible: "infeasible",
// then the witness rows and their columns.
std::string FormatStarSolution(const StarArray& array,
                               const StarSolution& solution);

struct StarFill {
  int rows = 0;
  int cols = 0;
  std::vector<int64_t> values;
  int64_t row_sum = 0;
  int64_t col_sum = 0;
};

// Reads the feasible form written by FormatStarSolution.
StarFill ParseStarFill(std::string_view text);

// Visits X in sigma order; x claims unclaimed neighbors in pi order until it
// holds r of them. Returns how many x reach r. A vertex that falls short keeps
// what it claimed unless `release_partial` is set.
int GreedyMatchingValue(const BipartiteGraph& graph, int r,
                        const std::vector<int>& sigma,
                        const std::vector<int>& pi, bool release_partial = false);

struct RhoResult {
  Rational rho;            // max over pi of min over sigma, divided by k
  int value = 0;           // the max-min count
  std::vector<int> pi;     // first optimal pi in lexicographic order
  std::vector<int> sigma;  // first worst sigma for that pi
};

inline constexpr int kRhoMaxSide = 7;

// Full enumeration over both permutation groups; k, n <= kRhoMaxSide.
RhoResult RhoRBruteforce(const BipartiteGraph& graph, int r,
                         bool release_partial = false);

}  // namespace nmp

#endif  // NMP_HARNESS_H_
