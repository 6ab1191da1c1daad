// Copyright 2026 The Authors.
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


// Runs the cmt executable and checks exit codes and outputs.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cmt/cmt.hpp"

namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cmt_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  // Exit status of `cmt args`; stdout goes to out.txt, stderr to err.txt.
  int run(const std::string& args) const {
    const std::string cmd = std::string(CMT_CLI_PATH) + " " + args + " > " + path("out.txt") +
                            " 2> " + path("err.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  fs::path dir_;
};

TEST_F(Cli, SolveOnTightInstanceExitsTwo) {
  write("tight.txt", cmt::emit_instance(cmt::gen_tight_instance(cmt::Family::kGF2, 2, 3)));
  EXPECT_EQ(run("solve " + path("tight.txt")), 2);
  EXPECT_NE(read("out.txt").find("outcome precondition-violated"), std::string::npos);
}

TEST_F(Cli, BruteOnRealLineNoteExitsThree) {
  write("line.txt", cmt::emit_instance(cmt::real_line_instance(4)));
  EXPECT_EQ(run("brute " + path("line.txt")), 3);
  EXPECT_NE(read("out.txt").find("outcome no-partition"), std::string::npos);
  EXPECT_EQ(run("solve " + path("line.txt")), 2);
}

TEST_F(Cli, GenTightThenBruteExitsThree) {
  ASSERT_EQ(run("gen-tight --family uniform --rank 2 --r 3"), 0);
  const auto text = read("out.txt");
  const auto inst = cmt::parse_instance(text);
  EXPECT_EQ(inst.sequence.size(), 4u);
  write("tight.txt", text);
  EXPECT_EQ(run("brute " + path("tight.txt")), 3);
}

TEST_F(Cli, SolveWritePartitionThenVerify) {
  ASSERT_EQ(run("gen-random --family graphic --rank 3 --r 3 --seed 5 --length 9"), 0);
  write("inst.txt", read("out.txt"));
  ASSERT_EQ(run("solve " + path("inst.txt") + " --check-invariants --write-partition " +
                path("part.txt")),
            0);
  EXPECT_NE(read("out.txt").find("outcome partition"), std::string::npos);
  EXPECT_EQ(run("verify " + path("inst.txt") + " " + path("part.txt")), 0);
  EXPECT_EQ(read("out.txt"), "ok\n");

  // Merging two parts breaks the part count.
  const auto parts = cmt::parse_partition_file(read("part.txt"));
  write("bad.txt", cmt::emit_partition_file({parts[0], parts[1]}));
  EXPECT_EQ(run("verify " + path("inst.txt") + " " + path("bad.txt")), 1);
  EXPECT_NE(read("out.txt").find("part-count"), std::string::npos);
}

TEST_F(Cli, SolveJson) {
  ASSERT_EQ(run("gen-random --family gf3 --rank 2 --r 2 --seed 1 --profile special"), 0);
  write("inst.txt", read("out.txt"));
  ASSERT_EQ(run("solve --json " + path("inst.txt")), 0);
  const auto j = nlohmann::json::parse(read("out.txt"));
  EXPECT_EQ(j["outcome"], "partition");
  EXPECT_EQ(j["parts"].size(), 2u);
  EXPECT_GT(j["oracle_calls"].get<int>(), 0);
}

TEST_F(Cli, BruteFindsPartitionOnGeneratedInstance) {
  ASSERT_EQ(run("gen-random --family rational --rank 2 --r 3 --seed 2"), 0);
  write("inst.txt", read("out.txt"));
  EXPECT_EQ(run("brute " + path("inst.txt")), 0);
}

TEST_F(Cli, ErrorsExitOne) {
  write("broken.txt", "matroid uniform\nrank 1\nsize 2\nend\nsequence 0 9\nr 1\nmode noncolor\n");
  EXPECT_EQ(run("solve " + path("broken.txt")), 1);
  EXPECT_NE(read("err.txt").find("line 5"), std::string::npos);
  EXPECT_EQ(run("solve " + path("missing.txt")), 1);
  EXPECT_EQ(run(""), 1);
  EXPECT_EQ(run("gen-random --family nope --rank 2 --r 2"), 1);
  EXPECT_EQ(run("gen-random --family gf2 --rank 3 --r 2 --profile special --colors 2"), 1);
  EXPECT_EQ(run("--help"), 0);
}

TEST_F(Cli, BenchCsv) {
  ASSERT_EQ(run("bench --ranks 2 3 --r-min 2 --r-max 4"), 0);
  std::istringstream lines(read("out.txt"));
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "family,m,r,len,oracle_calls,iterations,restarts,wall_ms");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 6);

  ASSERT_EQ(run("bench --ranks 2 --r-min 3 --r-max 3 --samples 4"), 0);
  std::istringstream sampled(read("out.txt"));
  rows = -1;
  while (std::getline(sampled, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

}  // namespace
