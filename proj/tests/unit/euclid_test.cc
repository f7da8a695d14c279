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

#include <gtest/gtest.h>

#include <numeric>

#include "nmp/error.h"
#include "nmp/nmp_check.h"
#include "test_util.h"

namespace nmp {
namespace {

using testing::FromEdges;

std::vector<int64_t> Tail(const std::vector<int64_t>& v, size_t from) {
  return std::vector<int64_t>(v.begin() + from, v.end());
}

TEST(ScheduleTest, FiveEight) {
  EuclidSchedule s = ComputeEuclidSchedule(5, 8);
  EXPECT_EQ(s.m, 4);
  EXPECT_EQ(Tail(s.r, 2), (std::vector<int64_t>{2, 3, 5, 8}));
  EXPECT_EQ(Tail(s.q, 1), (std::vector<int64_t>{2, 1, 1, 1}));
  EXPECT_EQ(s.small_side, Side::kLeft);
}

TEST(ScheduleTest, ThreeSeven) {
  EuclidSchedule s = ComputeEuclidSchedule(3, 7);
  EXPECT_EQ(s.m, 2);
  EXPECT_EQ(s.r, (std::vector<int64_t>{0, 1, 3, 7}));
  EXPECT_EQ(Tail(s.q, 1), (std::vector<int64_t>{3, 2}));
}

TEST(ScheduleTest, SingleDivision) {
  for (int q = 1; q <= 9; ++q) {
    EuclidSchedule s = ComputeEuclidSchedule(1, q);
    EXPECT_EQ(s.m, 1);
    EXPECT_EQ(s.q[1], q);
  }
}

TEST(ScheduleTest, SwappedSides) {
  EuclidSchedule s = ComputeEuclidSchedule(8, 5);
  EXPECT_EQ(s.m, 4);
  EXPECT_EQ(s.small_side, Side::kRight);
  EXPECT_EQ(StageAnchorSide(s, 4), Side::kRight);
  EXPECT_EQ(StageAnchorSide(s, 3), Side::kLeft);
}

TEST(ScheduleTest, RejectsNonCoprime) {
  EXPECT_THROW(ComputeEuclidSchedule(4, 6), Error);
  EXPECT_THROW(ComputeEuclidSchedule(2, 2), Error);
  EXPECT_THROW(ComputeEuclidSchedule(0, 3), Error);
}

TEST(ScheduleTest, BoundMatchesKnownValue) {
  EXPECT_NEAR(EuclidComplexityBound(8), 2.078 * std::log(8.0) + 0.6723, 1e-12);
  EXPECT_GE(EuclidComplexityBound(8), 4.0);
}

TEST(TreeTest, Star) {
  EuclideanTree t = BuildEuclideanTree(1, 4);
  EXPECT_EQ(t.graph.Edges(), (std::vector<Edge>{{0, 0}, {0, 1}, {0, 2}, {0, 3}}));
}

TEST(TreeTest, SingleEdge) {
  EuclideanTree t = BuildEuclideanTree(1, 1);
  EXPECT_EQ(t.graph.Edges(), (std::vector<Edge>{{0, 0}}));
}

TEST(TreeTest, TwoThree) {
  EXPECT_EQ(BuildEuclideanTree(2, 3).graph,
            FromEdges(2, 3, {{0, 0}, {1, 0}, {0, 1}, {1, 2}}));
}

TEST(TreeTest, ThreeSevenLayers) {
  // x_i y_{i+4}, then x_i y_{i+1}, then the star on y0.
  BipartiteGraph expected = FromEdges(3, 7,
                                      {{0, 4}, {1, 5}, {2, 6},
                                       {0, 1}, {1, 2}, {2, 3},
                                       {0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(BuildEuclideanTree(3, 7).graph, expected);
}

TEST(TreeTest, SuiteUpToSixty) {
  for (int ell = 1; ell <= 60; ++ell) {
    for (int L = 1; L <= 60; ++L) {
      if (std::gcd(ell, L) != 1) continue;
      EuclideanTree t = BuildEuclideanTree(ell, L);
      ASSERT_TRUE(IsConnected(t.graph)) << ell << "," << L;
      ASSERT_EQ(t.graph.edge_count(), ell + L - 1);
      ASSERT_EQ(CheckNmp(t.graph).verdict, Verdict::kHasNmp) << ell << "," << L;
      EuclidSchedule s = ComputeEuclidSchedule(ell, L);
      if (ell != L) {
        ASSERT_LE(s.m, EuclidComplexityBound(std::max(ell, L))) << ell << "," << L;
      }
      for (int i = 1; i <= s.m; ++i) {
        ASSERT_EQ(s.r[i + 1], s.q[i] * s.r[i] + s.r[i - 1]);
        if (s.m > 1 || ell != L) ASSERT_LT(s.r[i], s.r[i + 1]);
      }
    }
  }
}

TEST(TreeTest, DisjointCopiesKeepNmp) {
  for (auto [ell, L] : {std::pair{2, 3}, {3, 5}, {5, 8}, {4, 7}}) {
    BipartiteGraph t = BuildEuclideanTree(ell, L).graph;
    for (int copies = 2; copies <= 4; ++copies) {
      std::vector<BipartiteGraph> parts(copies, t);
      EXPECT_EQ(CheckNmp(DisjointUnion(parts)).verdict, Verdict::kHasNmp);
    }
  }
}

TEST(ProcessTest, FiveEightEvolution) {
  std::vector<TreeStage> stages = RunTreeProcess(5, 8);
  ASSERT_EQ(stages.size(), 4u);
  std::vector<std::pair<int, int>> sizes;
  for (const TreeStage& s : stages) sizes.push_back({s.tree.ell, s.tree.L});
  EXPECT_EQ(sizes, (std::vector<std::pair<int, int>>{{2, 1}, {2, 3}, {5, 3}, {5, 8}}));
  for (const TreeStage& s : stages) {
    EXPECT_EQ(ValidateThrill(s.thrill), "");
    EXPECT_TRUE(AreIsomorphicTrees(s.tree.graph,
                                   BuildEuclideanTree(s.tree.ell, s.tree.L).graph));
  }
}

TEST(ProcessTest, SingleStageStar) {
  std::vector<TreeStage> stages = RunTreeProcess(1, 6);
  ASSERT_EQ(stages.size(), 1u);
  EXPECT_EQ(stages[0].tree.graph, BuildEuclideanTree(1, 6).graph);
}

TEST(ProcessTest, FinalStageEqualsRecursiveTree) {
  for (int ell = 1; ell <= 60; ++ell) {
    for (int L = 1; L <= 60; ++L) {
      if (std::gcd(ell, L) != 1) continue;
      std::vector<TreeStage> stages = RunTreeProcess(ell, L);
      const BipartiteGraph& last = stages.back().tree.graph;
      const BipartiteGraph canonical = BuildEuclideanTree(ell, L).graph;
      ASSERT_TRUE(AreIsomorphicTrees(last, canonical)) << ell << "," << L;
      // The labelling rule reproduces the recursion vertex for vertex.
      ASSERT_EQ(last, canonical) << ell << "," << L;
    }
  }
}

TEST(IsomorphismTest, DistinguishesShapes) {
  // Path x0-y0-x1-y1-x2-y2 versus a spider with center y0.
  BipartiteGraph path = FromEdges(3, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}});
  BipartiteGraph spider = FromEdges(3, 3, {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});
  EXPECT_FALSE(AreIsomorphicTrees(path, spider));
  BipartiteGraph relabelled = FromEdges(3, 3, {{2, 2}, {1, 2}, {1, 0}, {0, 0}, {0, 1}});
  EXPECT_TRUE(AreIsomorphicTrees(path, relabelled));
  // Same shape with sides exchanged is not side-preserving.
  BipartiteGraph star_left = BipartiteGraph::Complete(1, 3);
  BipartiteGraph star_right = BipartiteGraph::Complete(3, 1);
  EXPECT_FALSE(AreIsomorphicTrees(star_left, star_right));
}

TEST(IsomorphismTest, RandomRelabellingsMatch) {
  Rng rng(4);
  for (auto [ell, L] : {std::pair{5, 8}, {13, 21}, {7, 12}, {19, 31}}) {
    BipartiteGraph t = BuildEuclideanTree(ell, L).graph;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int> px(ell), py(L);
      std::iota(px.begin(), px.end(), 0);
      std::iota(py.begin(), py.end(), 0);
      rng.Shuffle(px);
      rng.Shuffle(py);
      std::vector<Edge> edges;
      for (const Edge& e : t.Edges()) edges.push_back({px[e.x], py[e.y]});
      EXPECT_TRUE(AreIsomorphicTrees(t, BipartiteGraph(ell, L, edges)));
    }
  }
}

TreeCopy OffsetCopy(const BipartiteGraph& t, int dx, int dy) {
  TreeCopy copy;
  std::vector<int> xs, ys;
  for (int x = 0; x < t.left_size(); ++x) xs.push_back(x + dx);
  for (int y = 0; y < t.right_size(); ++y) ys.push_back(y + dy);
  copy.left = VertexSet(Side::kLeft, xs);
  copy.right = VertexSet(Side::kRight, ys);
  copy.left_map = xs;
  copy.right_map = ys;
  for (const Edge& e : t.Edges()) copy.edges.push_back({e.x + dx, e.y + dy});
  return copy;
}

TEST(VerifyFactorTest, TwoDisjointCopies) {
  BipartiteGraph t = BuildEuclideanTree(2, 3).graph;
  std::vector<BipartiteGraph> parts{t, t};
  BipartiteGraph g = DisjointUnion(parts);
  TreeFactor f{2, 3, {OffsetCopy(t, 0, 0), OffsetCopy(t, 2, 3)}};
  FactorReport r = VerifyTreeFactor(g, f, 2, 3, true);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(VerifyFactorTest, SharedVertexIsNamed) {
  BipartiteGraph t = BuildEuclideanTree(2, 3).graph;
  BipartiteGraph host = BipartiteGraph::Complete(4, 6);
  TreeFactor f{2, 3, {OffsetCopy(t, 0, 0), OffsetCopy(t, 1, 3)}};
  FactorReport r = VerifyTreeFactor(host, f, 2, 3, false);
  EXPECT_FALSE(r.ok);
  bool named = false;
  for (const std::string& d : r.diagnostics) named |= d.find("x1") != std::string::npos;
  EXPECT_TRUE(named);
}

TEST(VerifyFactorTest, MissingHostEdgeAndSpanning) {
  BipartiteGraph t = BuildEuclideanTree(2, 3).graph;
  BipartiteGraph host = FromEdges(4, 6, {{0, 0}, {1, 0}, {0, 1}});
  TreeFactor f{2, 3, {OffsetCopy(t, 0, 0)}};
  FactorReport r = VerifyTreeFactor(host, f, 2, 3, true);
  EXPECT_FALSE(r.ok);
  EXPECT_GE(r.diagnostics.size(), 2u);
}

TEST(VerifyFactorTest, WrongShape) {
  BipartiteGraph host = BipartiteGraph::Complete(2, 3);
  TreeCopy copy = OffsetCopy(BuildEuclideanTree(2, 3).graph, 0, 0);
  // x0 y0, x0 y1, x0 y2, x1 y0 is a tree with the right side sizes but a
  // different shape.
  copy.edges = {{0, 0}, {0, 1}, {0, 2}, {1, 0}};
  copy.left_map.clear();
  copy.right_map.clear();
  FactorReport r = VerifyTreeFactor(host, TreeFactor{2, 3, {copy}}, 2, 3, false);
  EXPECT_FALSE(r.ok);
}

TEST(VerifyFactorTest, BadIsomorphismMap) {
  BipartiteGraph host = BipartiteGraph::Complete(2, 3);
  TreeCopy copy = OffsetCopy(BuildEuclideanTree(2, 3).graph, 0, 0);
  std::swap(copy.right_map[1], copy.right_map[0]);
  FactorReport r = VerifyTreeFactor(host, TreeFactor{2, 3, {copy}}, 2, 3, true);
  EXPECT_FALSE(r.ok);
}

TEST(VerifyFactorTest, NonCoprimeIsADiagnostic) {
  FactorReport r = VerifyTreeFactor(BipartiteGraph::Complete(2, 2), TreeFactor{2, 2, {}},
                                    2, 2, false);
  EXPECT_FALSE(r.ok);
}

TEST(ThrillTest, Validation) {
  Thrill ok{Side::kLeft, 2, {{Side::kLeft, 0, {0, 1}}, {Side::kLeft, 1, {2, 3}}}};
  EXPECT_EQ(ValidateThrill(ok), "");
  Thrill shared{Side::kLeft, 2, {{Side::kLeft, 0, {0, 1}}, {Side::kLeft, 1, {1, 3}}}};
  EXPECT_NE(ValidateThrill(shared), "");
  Thrill short_fan{Side::kLeft, 2, {{Side::kLeft, 0, {0}}}};
  EXPECT_NE(ValidateThrill(short_fan), "");
}

TEST(SerializeFactorTest, Format) {
  TreeFactor f{1, 2, {}};
  TreeCopy c;
  c.left = VertexSet(Side::kLeft, {3});
  c.right = VertexSet(Side::kRight, {1, 4});
  f.copies.push_back(c);
  std::string text = SerializeFactor(f);
  EXPECT_NE(text.find("copy 0: X 3 | Y 1 4\n"), std::string::npos);
}

}  // namespace
}  // namespace nmp
