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

#include "nmp/harness.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "nmp/error.h"
#include "nmp/euclid.h"
#include "nmp/nmp_check.h"
#include "test_util.h"

namespace nmp {
namespace {

std::vector<int> Identity(int size) {
  std::vector<int> v(size);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

BipartiteGraph Cycle3() {
  return BipartiteGraph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}});
}

TEST(WilsonTest, ReferenceValues) {
  // Frozen from a direct evaluation of the score-interval formula.
  WilsonInterval a = Wilson(0, 10);
  EXPECT_NEAR(a.lo, 0.0, 1e-12);
  EXPECT_NEAR(a.hi, 0.2775328030260577, 1e-12);
  WilsonInterval b = Wilson(5, 10);
  EXPECT_NEAR(b.lo, 0.23659308901147935, 1e-12);
  EXPECT_NEAR(b.hi, 0.7634069109885206, 1e-12);
  WilsonInterval c = Wilson(199, 200);
  EXPECT_NEAR(c.lo, 0.972226295303572, 1e-12);
  EXPECT_NEAR(c.hi, 0.9991168312941546, 1e-12);
  EXPECT_NEAR(Wilson(10, 10).hi, 1.0, 1e-12);
}

TEST(SweepTest, Extremes) {
  SweepConfig cfg;
  cfg.k = 5;
  cfg.n = 6;
  cfg.p_grid = {0.0, 1.0};
  cfg.trials = 20;
  cfg.master_seed = 9;
  std::vector<SweepRow> rows = ThresholdSweep(cfg);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].successes, 0);
  EXPECT_EQ(rows[0].phat, 0.0);
  EXPECT_EQ(rows[1].successes, 20);
  EXPECT_EQ(rows[1].phat, 1.0);
  EXPECT_NEAR(rows[1].c, 5.0 / std::log(6.0), 1e-12);
  EXPECT_LE(rows[1].wilson_lo, 1.0);
}

TEST(SweepTest, DeterministicAcrossThreadCounts) {
  SweepConfig cfg;
  cfg.k = 20;
  cfg.n = 30;
  cfg.c_grid = {0.5, 1.0, 1.5, 2.0};
  cfg.trials = 40;
  cfg.master_seed = 123;
  std::vector<SweepRow> one = ThresholdSweep(cfg);
  cfg.threads = 3;
  std::vector<SweepRow> three = ThresholdSweep(cfg);
  ASSERT_EQ(one.size(), three.size());
  for (size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].successes, three[i].successes);
    EXPECT_NEAR(one[i].p, cfg.c_grid[i] * std::log(30.0) / 20.0, 1e-12);
  }
  // Coupled trials: successes never drop as p grows.
  for (size_t i = 1; i < one.size(); ++i) {
    EXPECT_LE(one[i - 1].successes, one[i].successes);
  }
  cfg.master_seed = 124;
  std::vector<SweepRow> other = ThresholdSweep(cfg);
  int diff = 0;
  for (size_t i = 0; i < one.size(); ++i) diff += one[i].successes != other[i].successes;
  EXPECT_GT(diff, 0);
}

TEST(SweepTest, RejectsBadConfig) {
  SweepConfig cfg;
  cfg.k = 3;
  cfg.n = 3;
  cfg.p_grid = {0.5};
  cfg.trials = 0;
  EXPECT_THROW(ThresholdSweep(cfg), Error);
  cfg.trials = 1;
  cfg.p_grid = {1.5};
  EXPECT_THROW(ThresholdSweep(cfg), Error);
}

TEST(SweepTest, CsvLayout) {
  SweepConfig cfg;
  cfg.k = 4;
  cfg.n = 4;
  cfg.p_grid = {0.0, 1.0};
  cfg.trials = 3;
  cfg.master_seed = 42;
  std::string csv = FormatSweepCsv(cfg, ThresholdSweep(cfg));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("# nmp-sweep-csv v1", 0), 0u) << line;
  EXPECT_NE(line.find("seed=42"), std::string::npos);
  std::getline(in, line);
  EXPECT_EQ(line, "p,c,trials,successes,phat,wilson_lo,wilson_hi");
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 6);
    ++rows;
  }
  EXPECT_EQ(rows, 2);
}

TEST(StarArrayTest, AllStarTwoByThree) {
  StarArray a = ParseStarArray("***\n***\n");
  StarSolution s = SolveStarArray(a);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.row_sum, 3);
  EXPECT_EQ(s.col_sum, 2);
  EXPECT_EQ(ValidateStarSolution(a, s), "");
}

TEST(StarArrayTest, ZeroColumnIsInfeasible) {
  StarArray a = ParseStarArray("*0*\n*0*\n");
  StarSolution s = SolveStarArray(a);
  ASSERT_FALSE(s.feasible);
  EXPECT_EQ(ValidateStarSolution(a, s), "");
  // The witness obeys k|N(S)| < n|S|.
  EXPECT_LT(2 * s.witness_columns.size(), 3 * s.witness_rows.size());
  EXPECT_TRUE(IsViolatingWitness(StarArrayGraph(a), s.witness_rows));
  std::string text = FormatStarSolution(a, s);
  EXPECT_EQ(text.rfind("infeasible\n", 0), 0u);
}

std::string StarText(const BipartiteGraph& g) {
  std::string text;
  for (int x = 0; x < g.left_size(); ++x) {
    for (int y = 0; y < g.right_size(); ++y) text += g.HasEdge(x, y) ? '*' : '0';
    text += '\n';
  }
  return text;
}

TEST(StarArrayTest, TwoTreeBlocks) {
  // Two disjoint copies of the T_{2,3} pattern on the diagonal.
  std::vector<BipartiteGraph> parts(2, BuildEuclideanTree(2, 3).graph);
  StarArray a = ParseStarArray(StarText(DisjointUnion(parts)));
  ASSERT_EQ(a.rows, 4);
  ASSERT_EQ(a.cols, 6);
  StarSolution s = SolveStarArray(a);
  ASSERT_TRUE(s.feasible);
  EXPECT_EQ(s.row_sum, 3);
  EXPECT_EQ(s.col_sum, 2);
  EXPECT_EQ(ValidateStarSolution(a, s), "");
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (!a.IsStar(r, c)) EXPECT_EQ(s.fill[r * 6 + c], 0);
    }
  }
}

TEST(StarArrayTest, TreePatternMatchesMultiplicity) {
  StarArray a = ParseStarArray(StarText(BuildEuclideanTree(2, 3).graph));
  StarSolution s = SolveStarArray(a);
  ASSERT_TRUE(s.feasible);
  std::vector<int64_t> positive;
  for (int64_t v : s.fill) {
    if (v > 0) positive.push_back(v);
  }
  std::sort(positive.begin(), positive.end());
  // Multiplicities {1, 1, 2, 2}, matching the exact-rational oracle.
  EXPECT_EQ(positive, (std::vector<int64_t>{1, 1, 2, 2}));
}

TEST(StarArrayTest, ParseErrors) {
  for (const char* bad : {"", "*x\n", "**\n*\n"}) {
    try {
      ParseStarArray(bad);
      FAIL() << "accepted: " << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kFormat);
    }
  }
  StarArray a = ParseStarArray("# comment\n\n*0\n0*\n");
  EXPECT_EQ(a.rows, 2);
  EXPECT_EQ(a.cols, 2);
}

TEST(StarArrayTest, FillRoundTrip) {
  StarArray a = ParseStarArray("******\n******\n******\n******\n");
  StarSolution s = SolveStarArray(a);
  ASSERT_TRUE(s.feasible);
  StarFill f = ParseStarFill(FormatStarSolution(a, s));
  EXPECT_EQ(f.rows, 4);
  EXPECT_EQ(f.cols, 6);
  EXPECT_EQ(f.values, s.fill);
  EXPECT_EQ(f.row_sum, 3);
  EXPECT_EQ(f.col_sum, 2);
}

TEST(StarArrayTest, RandomFillsValidate) {
  Rng rng(8);
  for (int iter = 0; iter < 200; ++iter) {
    BipartiteGraph g = testing::RandomGraph(rng, 8, 10);
    StarArray a = ParseStarArray(StarText(g));
    StarSolution s = SolveStarArray(a);
    EXPECT_EQ(s.feasible, CheckNmp(g).verdict == Verdict::kHasNmp);
    EXPECT_EQ(ValidateStarSolution(a, s), "");
  }
}

TEST(GreedyTest, CompleteGraphAlwaysSaturates) {
  Rng rng(3);
  for (int k = 1; k <= 6; ++k) {
    for (int n = k; n <= 9; ++n) {
      BipartiteGraph g = BipartiteGraph::Complete(k, n);
      std::vector<int> sigma = Identity(k);
      std::vector<int> pi = Identity(n);
      for (size_t i = sigma.size(); i > 1; --i) {
        std::swap(sigma[i - 1], sigma[rng.UniformBelow(i)]);
      }
      EXPECT_EQ(GreedyMatchingValue(g, n / k, sigma, pi), k);
    }
  }
}

TEST(GreedyTest, IsolatedVertexNeverServed) {
  BipartiteGraph g(3, 4, {{0, 0}, {0, 1}, {1, 2}, {1, 3}});
  EXPECT_LE(GreedyMatchingValue(g, 1, Identity(3), Identity(4)), 2);
}

TEST(GreedyTest, CycleExamples) {
  BipartiteGraph g = Cycle3();
  EXPECT_EQ(GreedyMatchingValue(g, 1, Identity(3), Identity(3)), 3);
  // x0 takes y1, x1 takes y2, x2 takes y0.
  EXPECT_EQ(GreedyMatchingValue(g, 1, {0, 1, 2}, {1, 0, 2}), 3);
  // x1 claims y1, then x0 claims y0, then x2 has only y2.
  EXPECT_EQ(GreedyMatchingValue(g, 1, {1, 0, 2}, {0, 1, 2}), 3);
  EXPECT_EQ(GreedyMatchingValue(g, 2, Identity(3), Identity(3)), 1);
}

TEST(GreedyTest, PartialClaimsMatter) {
  // x0 wants two but only gets y0; keeping y0 starves x1.
  BipartiteGraph g(2, 2, {{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(GreedyMatchingValue(g, 2, {0, 1}, {0, 1}, false), 0);
  EXPECT_EQ(GreedyMatchingValue(g, 2, {0, 1}, {0, 1}, true), 1);
}

TEST(GreedyTest, Preconditions) {
  BipartiteGraph g = Cycle3();
  EXPECT_THROW(GreedyMatchingValue(g, 0, Identity(3), Identity(3)), Error);
  EXPECT_THROW(GreedyMatchingValue(g, 1, {0, 0, 1}, Identity(3)), Error);
  EXPECT_THROW(GreedyMatchingValue(g, 1, Identity(2), Identity(3)), Error);
}

TEST(RhoTest, CycleValues) {
  // Frozen from the independent enumeration oracle.
  EXPECT_EQ(RhoRBruteforce(Cycle3(), 1).rho, Rational(2, 3));
  EXPECT_EQ(RhoRBruteforce(Cycle3(), 2).rho, Rational(1, 3));
  EXPECT_EQ(RhoRBruteforce(Cycle3(), 1, true).rho, Rational(2, 3));
  RhoResult r = RhoRBruteforce(Cycle3(), 1);
  EXPECT_EQ(GreedyMatchingValue(Cycle3(), 1, r.sigma, r.pi), r.value);
}

TEST(RhoTest, CompleteGraphsAreOne) {
  for (int k = 1; k <= 6; ++k) {
    for (int n = k; n <= 6; ++n) {
      EXPECT_EQ(RhoRBruteforce(BipartiteGraph::Complete(k, n), n / k).rho, Rational(1))
          << k << "x" << n;
    }
  }
}

TEST(RhoTest, IsolatedVertexCapsRho) {
  BipartiteGraph g(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  EXPECT_LE(RhoRBruteforce(g, 1).rho, Rational(2, 3));
}

TEST(RhoTest, SizeLimit) {
  EXPECT_THROW(RhoRBruteforce(BipartiteGraph::Complete(8, 8), 1), Error);
}

}  // namespace
}  // namespace nmp
