// Copyright 2026 The nc2ent Authors
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

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + NC2ENT_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(NC2ENT_DATA_DIR) + "/" + name; }

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    if (!line.empty()) out.push_back(Json::parse(line));
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nc2ent_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, ConvertGcnotZeroHasCRankTwo) {
  const Result r = run("convert --states " + data("gcnot_half_pi.json") + " --input '[1, 0]'");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["c_rank"], 2);
  EXPECT_EQ(j["schmidt"]["rank"], 2);
  EXPECT_GT(j["entropy_ebits"].get<double>(), 0.0);
}

TEST_F(CliTest, ConvertClassicalInputHasRankOne) {
  const Result r = run("convert --states " + data("gcnot_half_pi.json") +
                       " --epsilon 3 --input '[0.7071067811865476, -0.7071067811865476]'");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["c_rank"], 1);
  EXPECT_EQ(j["schmidt"]["rank"], 1);
}

TEST_F(CliTest, ConvertRejectsDependentSetAndBadEpsilon) {
  EXPECT_EQ(run("convert --states " + data("dependent.json") + " --input '[1, 0, 0]'").code, 1);
  EXPECT_EQ(run("convert --states " + data("gcnot_two_thirds_pi.json") + " --epsilon 5 --input '[1, 0]'").code, 1);
  EXPECT_EQ(run("convert --states " + data("unnormalized.json") + " --input '[1, 0]'").code, 1);
  EXPECT_EQ(run("convert --states " + data("unnormalized.json") + " --normalize --input '[1, 0]'").code, 0);
  EXPECT_EQ(run("convert --states " + data("gcnot_half_pi.json")).code, 2);
}

std::map<double, double> row_maxima(const std::string& csv) {
  std::map<double, double> best;
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "theta,mu,epsilon,ebits");
  while (std::getline(is, line)) {
    std::array<double, 4> f{};
    std::istringstream ls(line);
    std::string cell;
    for (double& x : f) {
      std::getline(ls, cell, ',');
      x = std::stod(cell);
    }
    auto [it, fresh] = best.emplace(f[0], f[3]);
    if (!fresh) it->second = std::max(it->second, f[3]);
  }
  return best;
}

TEST_F(CliTest, SweepDefaultGridHasOneEbitRows) {
  const Result r = run("sweep");
  ASSERT_EQ(r.code, 0);
  const auto best = row_maxima(r.out);
  EXPECT_EQ(best.size(), 64u);
  for (const auto& [theta, m] : best) {
    if (theta >= std::acos(-1.0) / 2) EXPECT_NEAR(m, 1.0, 1e-6) << theta;
  }
}

TEST_F(CliTest, SweepInputOneMirrors) {
  const Result zero = run("sweep --theta-range 30:150:9 --degrees --input 0");
  const Result one = run("sweep --theta-range 30:150:9 --degrees --input 1");
  ASSERT_EQ(zero.code, 0);
  ASSERT_EQ(one.code, 0);
  const auto a = row_maxima(zero.out);
  const auto b = row_maxima(one.out);
  std::vector<double> va, vb;
  for (const auto& [t, m] : a) va.push_back(m);
  for (const auto& [t, m] : b) vb.push_back(m);
  ASSERT_EQ(va.size(), 9u);
  for (std::size_t i = 0; i < va.size(); ++i) EXPECT_NEAR(va[i], vb[vb.size() - 1 - i], 1e-9);
}

TEST_F(CliTest, SweepUsageErrors) {
  EXPECT_EQ(run("sweep --theta-range 1:2:0").code, 2);
  EXPECT_EQ(run("sweep --mu-range 0.1:1").code, 2);
  EXPECT_EQ(run("sweep --input 2").code, 2);
  EXPECT_EQ(run("sweep --theta-range 0:1:3").code, 2);
}

TEST_F(CliTest, ModesplitSuccessRate) {
  const Result r = run("modesplit --K 2 --N 2 --target 1:1 --r 0.7071067811865476 --t 0.7071067811865476 --runs 10000 --seed 5");
  ASSERT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  const Json& s = lines.back();
  EXPECT_EQ(s["type"], "summary");
  const double rate = s["success_rate"].get<double>();
  EXPECT_LE(std::abs(rate - 0.5), 3.0 * std::sqrt(0.25 / 10000.0));
  EXPECT_EQ(lines.size(), 10001u);
}

TEST_F(CliTest, ModesplitZeroRunsAndErrors) {
  const Result r = run("modesplit --runs 0");
  ASSERT_EQ(r.code, 0);
  const auto lines = json_lines(r.out);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0]["runs"], 0);
  EXPECT_TRUE(lines[0]["success_rate"].is_null());
  EXPECT_EQ(run("modesplit --r 1").code, 2);
  EXPECT_EQ(run("modesplit --r 0.6 --t 0.6").code, 2);
  EXPECT_EQ(run("modesplit --N 3 --target 0:3").code, 2);
  EXPECT_EQ(run("modesplit --N 3 --target 1:1").code, 2);
}

TEST_F(CliTest, ModesplitSuperpositionFidelity) {
  const Result r = run("modesplit --input-file " + data("modesplit_superposition.json") +
                       " --target 1:2 --r 0.6 --runs 500 --max-rounds 30 --seed 3");
  ASSERT_EQ(r.code, 0);
  const Json s = json_lines(r.out).back();
  EXPECT_GT(s["successes"].get<int>(), 0);
  EXPECT_GE(s["min_fidelity"].get<double>(), 1.0 - 1e-9);
}

TEST_F(CliTest, DeterministicOutputs) {
  const std::string ms = "modesplit --N 4 --target 2:2 --runs 50 --max-rounds 5 --seed 11 --out ";
  ASSERT_EQ(run(ms + (dir_ / "a.jsonl").string()).code, 0);
  ASSERT_EQ(run(ms + (dir_ / "b.jsonl").string()).code, 0);
  EXPECT_EQ(slurp(dir_ / "a.jsonl"), slurp(dir_ / "b.jsonl"));

  const std::string sw = "sweep --theta-range 0.2:3:7 --mu-range 0.05:1:9 --out ";
  ASSERT_EQ(run(sw + (dir_ / "a.csv").string()).code, 0);
  ASSERT_EQ(run(sw + (dir_ / "b.csv").string()).code, 0);
  EXPECT_EQ(slurp(dir_ / "a.csv"), slurp(dir_ / "b.csv"));

  const std::string vf = "verify --suite gcnot --trials 1 --seed 4 --out " + (dir_ / "v.json").string();
  ASSERT_EQ(run(vf).code, 0);
  const std::string first = slurp(dir_ / "v.json");
  ASSERT_EQ(run(vf).code, 0);
  EXPECT_EQ(first, slurp(dir_ / "v.json"));
}

TEST_F(CliTest, SeedFromEnvironment) {
  const std::string args = "modesplit --N 3 --target 1:2 --runs 20 --max-rounds 4";
  const Result env = run(args, "NC2ENT_SEED=77");
  const Result flag = run(args + " --seed 77");
  ASSERT_EQ(env.code, 0);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(env.out, run(args + " --seed 78").out);
  EXPECT_EQ(run(args, "NC2ENT_SEED=abc").code, 2);
}

TEST_F(CliTest, WitnessPipeline) {
  const Result r = run("witness --states " + data("gcnot_half_pi.json") +
                       " --epsilon 1e6 --target-state '[1, 0]' --test-state '[0.7071067811865476, 0.7071067811865476]'"
                       " --samples 2000 --witness-out " + (dir_ / "w.json").string());
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_LT(j["tests"][0]["value"].get<double>(), -0.01);
  EXPECT_EQ(j["tests"][0]["verdict"], "non-classical detected");
  EXPECT_GE(j["tests"][1]["value"].get<double>(), -1e-10);
  EXPECT_EQ(j["tests"][1]["verdict"], "not detected");
  EXPECT_GE(j["min_classical_expectation"].get<double>(), -1e-10);
  EXPECT_GE(j["min_product_expectation"].get<double>(), -1e-10);
  const Json w = Json::parse(slurp(dir_ / "w.json"));
  EXPECT_EQ(w["rows"], 2);
  EXPECT_EQ(w["entries"].size(), 4u);
}

TEST_F(CliTest, VerifySmokeAndUsage) {
  const Result r = run("verify --trials 1 --out " + (dir_ / "report.json").string());
  EXPECT_EQ(r.code, 0) << r.out;
  const Json j = Json::parse(slurp(dir_ / "report.json"));
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_GE(j["checks"].size(), 10u);
  EXPECT_EQ(run("verify --suite nope").code, 2);
  EXPECT_EQ(run("verify --trials 0").code, 2);
  EXPECT_EQ(run("").code, 2);
}

}  // namespace
