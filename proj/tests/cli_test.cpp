// Copyright 2026 The modlie Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "modlie/grid.hpp"
#include "modlie/io.hpp"

namespace modlie::cli {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("modlie_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& body) {
    const auto p = dir_ / name;
    std::ofstream(p) << body;
    return p.string();
  }
  std::filesystem::path dir_;
};

TEST(Cli, ValidateFixture) {
  const Result r = call({"validate", "fixture:lemma-v"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["dim"], 4);
}

TEST_F(TempDir, NonCommutingFileExitsTwo) {
  const std::string f =
      write("bad.json", R"({"dim": 2, "P": [[0, 1], [0, 0]], "Q": [[1, 0], [0, 0]]})");
  const Result r = call({"validate", f});
  EXPECT_EQ(r.code, kExitInput);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["error"], "NonCommuting");
  EXPECT_EQ(j["commutator"][0][1], "-1");
}

TEST_F(TempDir, RationalEntriesParse) {
  const std::string f =
      write("half.json", R"({"dim": 1, "P": [["1/2"]], "Q": [["-2/4"]]})");
  const Result r = call({"invariants", f});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(json::parse(r.out)["weak_invariants"]["generic rank"], 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"validate", "/nonexistent/pair.json"}).code, kExitInput);
  EXPECT_EQ(call({"validate", "fixture:nope"}).code, kExitInput);
  EXPECT_EQ(call({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(call({}).code, kExitInput);
  EXPECT_EQ(call({"indec", "fixture:zero(0)"}).code, kExitInput);
}

TEST(Cli, WeakIsoLemma) {
  const Result r = call({"weak-iso", "fixture:lemma-v", "fixture:lemma-w"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["answer"], "no");
  EXPECT_EQ(j["refutation"]["invariant"], "annihilator dim");
  EXPECT_EQ(j["refutation"]["left"], 2);
  EXPECT_EQ(j["refutation"]["right"], 3);
}

TEST(Cli, IsoSelf) {
  const Result r = call({"iso", "fixture:lemma-w", "fixture:lemma-w"});
  EXPECT_EQ(r.code, kExitOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["answer"], "yes");
  EXPECT_EQ(j["certificate"]["kind"], "iso");
  EXPECT_EQ(j["certificate"]["x"][2][2], "1");
}

TEST_F(TempDir, VerifyRoundTrip) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"weak-iso", "fixture:nonisom-a(left)", "fixture:nonisom-a(right)"},
           {"iso", "fixture:nonisom-a(left)", "fixture:nonisom-a(right)"},
           {"indec", "fixture:lemma-v"},
           {"indec", "fixture:jordan(7)"}}) {
    const Result r = call(cmd);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const std::string f = write("verdict.json", r.out);
    std::vector<std::string> again = cmd;
    again.push_back("--verify");
    again.push_back(f);
    const Result v = call(again);
    EXPECT_EQ(v.code, kExitOk) << cmd[0] << ": " << v.out << v.err;
  }
}

TEST_F(TempDir, VerifyRejectsTamperedCertificate) {
  const Result r = call({"weak-iso", "fixture:nonisom-a(left)", "fixture:nonisom-a(right)"});
  json j = json::parse(r.out);
  j["certificate"]["theta"] = json::array({json::array({"1", "0"}), json::array({"0", "1"})});
  const std::string f = write("bad.json", j.dump());
  const Result v = call({"weak-iso", "fixture:nonisom-a(left)", "fixture:nonisom-a(right)",
                         "--verify", f});
  EXPECT_EQ(v.code, kExitFailed);
}

TEST_F(TempDir, FixtureOutAndLie) {
  const std::string p = (dir_ / "v.json").string();
  EXPECT_EQ(call({"fixture", "lemma-w", "--out", p}).code, kExitOk);
  const Result r = call({"validate", p});
  EXPECT_EQ(r.code, kExitOk);
  const Result l = call({"lie", p});
  EXPECT_EQ(l.code, kExitOk);
  EXPECT_EQ(json::parse(l.out)["dim"], 6);
}

TEST(Cli, SuitesAndDeterminism) {
  const Result a = call({"suite", "prop1", "--trials", "8", "--seed", "42", "--dim-max", "4"});
  const Result b = call({"suite", "prop1", "--trials", "8", "--seed", "42", "--dim-max", "4"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["passes"], 8);
  EXPECT_EQ(json::parse(a.out).count("wall_seconds"), 0u);
  const Result c = call({"suite", "counterexample"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(json::parse(c.out)["passes"], 4);
  EXPECT_EQ(call({"suite", "bogus"}).code, kExitInput);
}

TEST(Cli, Census) {
  const Result a = call({"census", "--dim", "2", "--trials", "10", "--seed", "3"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, call({"census", "--dim", "2", "--trials", "10", "--seed", "3"}).out);
  EXPECT_EQ(call({"census", "--dim", "2"}).code, kExitInput);
}

TEST(Cli, TableMode) {
  const Result r = call({"--table", "weak-iso", "fixture:lemma-v", "fixture:lemma-w"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("no"), std::string::npos);
  EXPECT_THROW(json::parse(r.out), json::parse_error);
}

TEST(Cli, BudgetEnvironment) {
  ::setenv("MODLIE_BUDGET", "10", 1);
  const GridConfig c = grid_config_from_env();
  const Result r = call({"iso", "--exact", "fixture:jordan(9)", "fixture:cyclic-monomial(x^3,y^3)"});
  ::unsetenv("MODLIE_BUDGET");
  EXPECT_EQ(c.budget, 10u);
  EXPECT_EQ(grid_config_from_env().budget, kDefaultGridBudget);
  // Over budget, the exact path falls back to cheap invariants.
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["answer"], "no");
  EXPECT_EQ(j["confidence"]["exact"], true);
  EXPECT_EQ(j["refutation"]["invariant"], "ranks of powers of P");
}

}  // namespace
}  // namespace modlie::cli
