// Copyright 2026 The erpg Authors.
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "erpg/erpg.hpp"

namespace {

namespace fs = std::filesystem;
using erpg::Json;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path scratch_dir() {
  const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
  auto dir = fs::temp_directory_path() / ("erpg_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

Run run(const std::string& args, const std::string& env = "") {
  const auto dir = scratch_dir();
  const auto out = dir / "stdout", err = dir / "stderr";
  const std::string cmd =
      env + " '" + std::string(ERPG_CLI_PATH) + "' " + args + " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

TEST(CliBuild, OddSquareNineGivesTwentyTwo) {
  const auto r = run("build --q 9");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["size"], 22);
  EXPECT_EQ(doc["construction"], "odd_sq_neg");
  EXPECT_TRUE(doc["verified"]["independent"].get<bool>());
}

TEST(CliBuild, CertificateRoundTripsThroughLibrary) {
  const auto dir = scratch_dir();
  const auto file = dir / "c25.json";
  const auto r = run("build --q 25 --out '" + file.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find('{'), std::string::npos);  // summary only, certificate went to the file
  const auto doc = Json::parse(slurp(file));
  const erpg::Plane plane(erpg::make_field_of_order(25));
  const auto er = erpg::build_er_graph(plane);
  const auto pts = erpg::certificate_points(plane, doc);
  EXPECT_EQ(pts.size(), 101u);
  EXPECT_TRUE(erpg::is_independent(er, pts));
}

TEST(CliBuild, EvenArcReportsExtensionCandidates) {
  const auto r = run("build --q 8 --construction even-arc");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["size"], 10);
  EXPECT_EQ(doc["extension"]["candidates"], 18);
  EXPECT_NE(r.err.find("extension_candidates=18"), std::string::npos);
}

TEST(CliBuild, TriangleFreeCertificate) {
  const auto r = run("build --q 16 --construction triangle-free");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["size"], 16 * 17 / 2);
  EXPECT_TRUE(doc["verified"]["triangle_free"].get<bool>());
}

TEST(CliBuild, RejectsBadOrders) {
  EXPECT_EQ(run("build --q 6").code, 2);
  EXPECT_EQ(run("build --q 1").code, 2);
  EXPECT_EQ(run("build --q 256").code, 2);
  EXPECT_EQ(run("build --q 7").code, 2);                             // odd non-square: no construction
  EXPECT_EQ(run("build --q 9 --construction even-arc").code, 2);    // odd q
  EXPECT_EQ(run("build --q 9 --construction odd-pos").code, 2);     // sqrt 9 = 3 mod 4
  EXPECT_EQ(run("build --q 9 --construction nonsense").code, 2);
  EXPECT_EQ(run("build").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(CliGraph, VertexAndEdgeCounts) {
  struct Case {
    int q;
    int n, m;
  };
  for (const auto c : {Case{2, 7, 9}, Case{3, 13, 24}, Case{4, 21, 50}}) {
    const auto r = run("graph --q " + std::to_string(c.q) + " --format dimacs");
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.err.find("n=" + std::to_string(c.n) + " m=" + std::to_string(c.m)), std::string::npos) << r.err;
    std::istringstream is(r.out);
    std::string p, edge;
    int n = 0, m = 0;
    is >> p >> edge >> n >> m;
    EXPECT_EQ(n, c.n);
    EXPECT_EQ(m, c.m);
  }
}

TEST(CliGraph, Graph6FileMatchesLibrary) {
  const auto dir = scratch_dir();
  const auto file = dir / "er5.g6";
  const auto r = run("graph --q 5 --format graph6 --out '" + file.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  const erpg::Plane plane(erpg::make_field_of_order(5));
  const auto er = erpg::build_er_graph(plane);
  auto text = slurp(file);
  ASSERT_FALSE(text.empty());
  EXPECT_EQ(text.back(), '\n');
  text.pop_back();
  const auto back = erpg::parse_graph6(text);
  ASSERT_EQ(back.size(), er.size());
  for (std::uint32_t u = 0; u < er.size(); ++u) {
    for (std::uint32_t v = 0; v < er.size(); ++v) EXPECT_EQ(back.has_edge(u, v), er.has_edge(u, v));
  }
}

TEST(CliGraph, RejectsUnknownFormat) { EXPECT_EQ(run("graph --q 3 --format xml").code, 2); }

TEST(CliSolve, SmallOrdersAreOptimal) {
  const auto r2 = run("--json solve --q 2");
  ASSERT_EQ(r2.code, 0) << r2.err;
  const auto j2 = Json::parse(r2.out);
  EXPECT_EQ(j2["result"]["status"], "optimal");
  EXPECT_EQ(j2["result"]["alpha"], 3);

  const auto r5 = run("--json solve --q 5");
  ASSERT_EQ(r5.code, 0) << r5.err;
  const auto j5 = Json::parse(r5.out);
  EXPECT_EQ(j5["result"]["status"], "optimal");
  EXPECT_LE(j5["result"]["alpha"].get<int>(), 14);
  EXPECT_EQ(j5["result"]["upper_bound"], 14);
}

TEST(CliSolve, SmallBudgetKeepsSeed) {
  const auto r = run("--json solve --q 9 --budget 200");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["result"]["status"], "budget_exhausted");
  EXPECT_GE(j["result"]["alpha"].get<int>(), 22);
}

TEST(CliSolve, BudgetFromEnvironment) {
  const auto r = run("--json solve --q 9", "ERPG_BUDGET_NODES=150");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["parameters"]["budget_nodes"], 150);
  EXPECT_EQ(j["result"]["status"], "budget_exhausted");
  EXPECT_EQ(run("solve --q 3", "ERPG_BUDGET_NODES=abc").code, 2);
}

TEST(CliOrbits, NinePasses) {
  const auto r = run("orbits --q 9");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
  const auto j = Json::parse(run("--json orbits --q 9").out);
  EXPECT_TRUE(j["result"]["pass"].get<bool>());
  EXPECT_EQ(j["result"]["total"], 78);  // q^2 + q + 1 - (sqrt(q)^2 + sqrt(q) + 1)
  EXPECT_EQ(run("orbits --q 8").code, 2);
  EXPECT_EQ(run("orbits --q 7").code, 2);
}

TEST(CliTable, KnownRows) {
  const auto r = run("--json table");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  bool saw16 = false, saw8 = false;
  for (const auto& row : j["result"]["rows"]) {
    if (row["q"] == 16) {
      saw16 = true;
      EXPECT_EQ(row["prior_lower"], 52);
      EXPECT_EQ(row["upper"], 53);
      EXPECT_EQ(row["constructed"], 52);
    }
    if (row["q"] == 8) {
      saw8 = true;
      EXPECT_EQ(row["new_lower"], 10);
      EXPECT_EQ(row["constructed"], 10);
    }
  }
  EXPECT_TRUE(saw16);
  EXPECT_TRUE(saw8);
}

TEST(CliDeterminism, IdenticalRunsAreByteIdentical) {
  for (const std::string args : {"build --q 49", "--json table", "graph --q 7 --format csv", "--json solve --q 4",
                                 "hypergraph --q 8 --samples 500"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(CliHypergraph, EdgeCsv) {
  const auto dir = scratch_dir();
  const auto file = dir / "h5.csv";
  const auto r = run("hypergraph --q 5 --out '" + file.string() + "'");
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream is(slurp(file));
  std::string line;
  int lines = 0;
  while (std::getline(is, line)) ++lines;
  EXPECT_EQ(lines, 5 * 24 / 6);
}

}  // namespace
