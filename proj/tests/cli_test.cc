// Copyright 2026 The InfTDA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "subprocess.hpp"

namespace inftda {
namespace {

namespace fs = std::filesystem;
using testing::make_temp_dir;
using testing::read_file;
using testing::run_command;
using testing::write_file;

const std::string kCli = INFTDA_CLI_PATH;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = make_temp_dir("inftda-cli"); }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path dir_;
};

TEST_F(CliTest, HelpExitsZeroAndListsFlags) {
  const auto result = run_command(kCli + " --help");
  EXPECT_EQ(result.exit_code, 0);
  EXPECT_NE(result.output.find("run"), std::string::npos);
  EXPECT_NE(result.output.find("bound"), std::string::npos);
  EXPECT_NE(result.output.find("evaluate"), std::string::npos);
  const auto run_help = run_command(kCli + " run --help");
  EXPECT_EQ(run_help.exit_code, 0);
  for (const char* flag :
       {"--input", "--output", "--rho", "--beta", "--seed", "--columns",
        "--format", "--zero-noise", "--threads"}) {
    EXPECT_NE(run_help.output.find(flag), std::string::npos) << flag;
  }
  const auto bound_help = run_command(kCli + " bound --help");
  EXPECT_EQ(bound_help.exit_code, 0);
  for (const char* flag : {"--k", "--all-levels", "--domains"}) {
    EXPECT_NE(bound_help.output.find(flag), std::string::npos) << flag;
  }
  const auto evaluate_help = run_command(kCli + " evaluate --help");
  EXPECT_EQ(evaluate_help.exit_code, 0);
  EXPECT_NE(evaluate_help.output.find("--trials"), std::string::npos);
}

TEST_F(CliTest, MissingInputFileExitsTwo) {
  const auto result = run_command(kCli + " run --input " +
                                  (dir_ / "nope.csv").string() + " --output " +
                                  path("out.csv").string());
  EXPECT_EQ(result.exit_code, 2);
}

TEST_F(CliTest, RaggedCsvExitsTwo) {
  write_file(path("bad.csv"), "a,b\nx,p\nx,p,q\n");
  const auto result =
      run_command(kCli + " run --input " + path("bad.csv").string() +
                  " --output " + path("out.csv").string());
  EXPECT_EQ(result.exit_code, 2);
  EXPECT_NE(result.output.find("line 3"), std::string::npos);
}

TEST_F(CliTest, InvalidBetaExitsOne) {
  write_file(path("in.csv"), "a,b\nx,p\nx,q\n");
  const auto result =
      run_command(kCli + " run --input " + path("in.csv").string() +
                  " --output " + path("out.csv").string() + " --beta 1.5");
  EXPECT_EQ(result.exit_code, 1);
}

TEST_F(CliTest, UnknownFormatExitsOne) {
  write_file(path("in.csv"), "a,b\nx,p\nx,q\n");
  const auto result = run_command(
      kCli + " run --input " + path("in.csv").string() + " --output " +
      path("out.csv").string() + " --format parquet --zero-noise");
  EXPECT_EQ(result.exit_code, 1);
}

TEST_F(CliTest, UnknownSubcommandExitsOne) {
  EXPECT_EQ(run_command(kCli + " frobnicate").exit_code, 1);
  EXPECT_EQ(run_command(kCli).exit_code, 1);
}

TEST_F(CliTest, ZeroNoiseRunReproducesInput) {
  const std::string input = "a,b\nx,p\nx,p\nx,q\ny,q\n";  // already sorted
  write_file(path("in.csv"), input);
  const auto result = run_command(
      kCli + " run --input " + path("in.csv").string() + " --output " +
      path("out.csv").string() + " --zero-noise --seed 9");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  EXPECT_EQ(read_file(path("out.csv")), input);

  const auto report =
      nlohmann::json::parse(read_file(path("out.csv.report.json")));
  EXPECT_EQ(report.at("seed"), 9);
  for (const auto& level : report.at("levels")) {
    EXPECT_EQ(level.at("max_abs_error"), 0);
  }
}

TEST_F(CliTest, TableFormatHasOneRowPerNonzeroLeaf) {
  write_file(path("in.csv"), "a,b\nx,p\nx,p\nx,q\ny,q\n");
  const auto result = run_command(
      kCli + " run --input " + path("in.csv").string() + " --output " +
      path("out.csv").string() + " --format table --zero-noise");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  EXPECT_EQ(read_file(path("out.csv")),
            "a,b,count\nx,p,2\nx,q,1\ny,q,1\n");
}

TEST_F(CliTest, ColumnOverrideReordersHierarchy) {
  write_file(path("in.csv"), "a,b\nx,p\ny,q\n");
  const auto result = run_command(
      kCli + " run --input " + path("in.csv").string() + " --output " +
      path("out.csv").string() + " --columns b,a --zero-noise");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  EXPECT_EQ(read_file(path("out.csv")), "b,a\np,x\nq,y\n");
}

TEST_F(CliTest, BoundPrintsThreeDecimals) {
  const auto result =
      run_command(kCli + " bound --k 1 --rho 1 --beta 0.05 --domains 2,2");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  EXPECT_EQ(result.output, "7.683\n");
}

TEST_F(CliTest, BoundAllLevelsPrintsOneLinePerLevel) {
  const auto result = run_command(
      kCli + " bound --all-levels --rho 1 --beta 0.05 --domains 4,4,4");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  int lines = 0;
  for (char c : result.output) {
    lines += (c == '\n');
  }
  EXPECT_EQ(lines, 3);
}

TEST_F(CliTest, BoundValidation) {
  EXPECT_EQ(run_command(kCli + " bound --k 1 --rho 1 --beta 1.5 --domains 2,2")
                .exit_code,
            1);
  EXPECT_EQ(run_command(kCli + " bound --k 3 --rho 1 --beta 0.1 --domains 2,2")
                .exit_code,
            1);
  EXPECT_EQ(run_command(kCli + " bound --k 1 --rho 0 --beta 0.1 --domains 2,2")
                .exit_code,
            1);
  EXPECT_EQ(
      run_command(kCli + " bound --k 1 --rho 1 --beta 0.1 --domains 2,1")
          .exit_code,
      1);
  EXPECT_EQ(run_command(kCli + " bound --k 1 --rho abc --beta 0.1 --domains 2,2")
                .exit_code,
            1);
}

TEST_F(CliTest, EvaluateWritesReportWithPassRates) {
  write_file(path("in.csv"), "a,b\nx,p\nx,p\nx,q\ny,q\n");
  const auto result = run_command(
      kCli + " evaluate --input " + path("in.csv").string() + " --output " +
      path("report.json").string() +
      " --rho 1 --beta 0.05 --trials 3 --zero-noise --seed 4");
  ASSERT_EQ(result.exit_code, 0) << result.output;
  const auto report = nlohmann::json::parse(read_file(path("report.json")));
  EXPECT_EQ(report.at("trials"), 3);
  EXPECT_DOUBLE_EQ(report.at("joint_pass_rate").get<double>(), 1.0);
  for (const auto& level : report.at("levels")) {
    EXPECT_DOUBLE_EQ(level.at("pass_rate").get<double>(), 1.0);
    EXPECT_EQ(level.at("max_abs_error"), 0);
  }
}

TEST_F(CliTest, EvaluateMissingInputExitsTwo) {
  const auto result = run_command(
      kCli + " evaluate --input " + (dir_ / "absent.csv").string() +
      " --output " + path("report.json").string());
  EXPECT_EQ(result.exit_code, 2);
}

TEST_F(CliTest, SameSeedSameBytes) {
  write_file(path("in.csv"), "a,b,c\nx,p,0\nx,q,1\ny,p,0\ny,q,1\nx,p,1\n");
  const std::string base = kCli + " run --input " + path("in.csv").string() +
                           " --rho 1/2 --seed 21 --output ";
  ASSERT_EQ(run_command(base + path("one.csv").string()).exit_code, 0);
  ASSERT_EQ(run_command(base + path("two.csv").string()).exit_code, 0);
  EXPECT_EQ(read_file(path("one.csv")), read_file(path("two.csv")));
  EXPECT_EQ(read_file(path("one.csv.report.json")),
            read_file(path("two.csv.report.json")));
}

}  // namespace
}  // namespace inftda
