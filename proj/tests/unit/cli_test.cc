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

#include "cli.h"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "nmp/graph.h"
#include "nmp/harness.h"
#include "test_util.h"

namespace nmp {
namespace {

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

CliRun Cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.status = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testing::ScratchDir(
        ::testing::UnitTest::GetInstance()->current_test_info()->name());
  }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::string WriteGraph(const std::string& name, const BipartiteGraph& g) {
    return Write(name, SerializeGraph(g));
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, CheckCompleteGraph) {
  CliRun r = Cli({"check", WriteGraph("k23.txt", BipartiteGraph::Complete(2, 3))});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verdict: has_nmp"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckEmptyGraphIsANegativeAnswer) {
  CliRun r = Cli({"check", WriteGraph("empty.txt", BipartiteGraph(2, 2, {}))});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("verdict: violated"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckJson) {
  CliRun r = Cli({"check", WriteGraph("k23.txt", BipartiteGraph::Complete(2, 3)), "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "has_nmp");
  EXPECT_EQ(j["row_sum"], 3);
  EXPECT_EQ(j["col_sum"], 2);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"check", "--bogus"}).status, kExitUsage);
  EXPECT_EQ(Cli({}).status, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).status, kExitUsage);
  CliRun r = Cli({"tree", "--l", "2"});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, MalformedGraphIsAFormatError) {
  CliRun r = Cli({"check", Write("bad.txt", "not a graph\n")});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, MissingFile) {
  EXPECT_NE(Cli({"check", (dir_ / "absent.txt").string()}).status, kExitOk);
}

TEST_F(CliTest, DomainErrorsExitOne) {
  // gcd(4, 6) = 2: the tree needs coprime sides.
  EXPECT_EQ(Cli({"tree", "--l", "4", "--L", "6"}).status, kExitDomain);
  EXPECT_EQ(Cli({"gen", "pg2", "--q", "4"}).status, kExitDomain);
}

TEST_F(CliTest, TreeEmitAndVerify) {
  const std::string path = (dir_ / "t58.txt").string();
  CliRun r = Cli({"tree", "--l", "5", "--L", "8", "--verify", "--emit", path});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  BipartiteGraph g = ReadGraphFile(path);
  EXPECT_EQ(g.left_size(), 5);
  EXPECT_EQ(g.right_size(), 8);
  EXPECT_EQ(g.edge_count(), 12);
  CliRun c = Cli({"check", path});
  EXPECT_NE(c.out.find("has_nmp"), std::string::npos);
}

TEST_F(CliTest, GeneratorThenVerify) {
  const std::string path = (dir_ / "pg.txt").string();
  ASSERT_EQ(Cli({"gen", "pg2", "--q", "3", "--out", path}).status, kExitOk);
  CliRun r = Cli({"verify-pseudo", path, "--p", "4/13", "--eps", "0"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("pass"), std::string::npos) << r.out;
  CliRun e = Cli({"verify-pseudo", path, "--estimate"});
  EXPECT_EQ(e.status, kExitOk) << e.err;
  EXPECT_NE(e.out.find("4/13"), std::string::npos) << e.out;
}

TEST_F(CliTest, GnpToStdoutIsDeterministic) {
  CliRun a = Cli({"gen", "gnp", "--k", "5", "--n", "7", "--p", "0.5", "--seed", "3"});
  CliRun b = Cli({"gen", "gnp", "--k", "5", "--n", "7", "--p", "0.5", "--seed", "3"});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(ParseGraph(a.out).left_size(), 5);
}

TEST_F(CliTest, AuditAndRobustDelete) {
  const std::string path = (dir_ / "pg11.txt").string();
  ASSERT_EQ(Cli({"gen", "pg2", "--q", "11", "--out", path}).status, kExitOk);
  CliRun a = Cli({"audit", path, "--p", "12/133", "--eps", "0", "--samples", "200",
               "--seed", "5"});
  EXPECT_EQ(a.status, kExitOk) << a.err;
  CliRun d = Cli({"robust-delete", path, "--p0", "12/133", "--eps0", "0", "--eps", "0.3",
               "--D", "3", "--seed", "1"});
  EXPECT_EQ(d.status, kExitOk) << d.err;
  CliRun bad = Cli({"robust-delete", path, "--p0", "12/133", "--eps0", "0", "--eps",
                 "0.6", "--D", "3", "--seed", "1"});
  EXPECT_EQ(bad.status, kExitDomain);
}

TEST_F(CliTest, DecomposeWritesTraceAndFactor) {
  const std::string graph = (dir_ / "g.txt").string();
  ASSERT_EQ(Cli({"gen", "gnp", "--k", "30", "--n", "50", "--p", "0.8", "--seed", "1",
                 "--out", graph})
                .status,
            kExitOk);
  const std::string trace = (dir_ / "trace.json").string();
  const std::string factor = (dir_ / "factor.txt").string();
  CliRun r = Cli({"decompose", graph, "--eps", "0.1", "--mode", "direct", "--trace-json",
               trace, "--emit-factor", factor});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  nlohmann::json j = nlohmann::json::parse(Slurp(trace));
  EXPECT_EQ(j["remainder_nmp_verified"], true);
  ASSERT_TRUE(j.contains("trace"));
  EXPECT_FALSE(j["trace"]["stages"].empty());
  EXPECT_NE(Slurp(factor).find("copy 0: X "), std::string::npos);
  EXPECT_EQ(Cli({"decompose", graph, "--eps", "0.1", "--mode", "sideways"}).status,
            kExitUsage);
}

TEST_F(CliTest, SweepToStdout) {
  CliRun r = Cli({"sweep", "--k", "6", "--n", "6", "--p-list", "0,1", "--trials", "5",
               "--seed", "2", "--out", "-"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("p,c,trials,successes,phat,wilson_lo,wilson_hi"),
            std::string::npos);
  EXPECT_EQ(Cli({"sweep", "--k", "6", "--n", "6", "--trials", "5", "--seed", "2",
                 "--out", "-"})
                .status,
            kExitUsage);
}

TEST_F(CliTest, StarArray) {
  CliRun r = Cli({"star", Write("a.txt", "******\n******\n******\n******\n")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  StarFill f = ParseStarFill(r.out);
  EXPECT_EQ(f.row_sum, 3);
  EXPECT_EQ(f.col_sum, 2);
  CliRun bad = Cli({"star", Write("b.txt", "*0\n*0\n")});
  EXPECT_EQ(bad.status, kExitOk);
  EXPECT_EQ(bad.out.rfind("infeasible", 0), 0u);
  EXPECT_EQ(Cli({"star", Write("c.txt", "*a\n")}).status, kExitUsage);
}

TEST_F(CliTest, Greedy) {
  const std::string path = WriteGraph(
      "c6.txt", BipartiteGraph(3, 3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}}));
  CliRun r = Cli({"greedy", path, "--r", "1", "--sigma", "0,1,2", "--pi", "0,1,2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("3"), std::string::npos);
  CliRun b = Cli({"greedy", path, "--r", "1", "--bruteforce"});
  ASSERT_EQ(b.status, kExitOk) << b.err;
  EXPECT_NE(b.out.find("2/3"), std::string::npos) << b.out;
}

}  // namespace
}  // namespace nmp
