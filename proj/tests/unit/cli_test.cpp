// Copyright 2026 The cdim Authors
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

#include "cdim_cli/commands.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace cdim::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cdim_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()
                                                  ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(CliTest, GenPathWritesEdgeList) {
  Outcome r = invoke({"gen", "path", "8", "-o", path("p8.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(path("p8.txt"));
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "n 8");
}

TEST_F(CliTest, GenConstructionWritesBasisSidecar) {
  Outcome r = invoke({"gen", "diam3", "4", "-o", path("d3.txt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("n=51"), std::string::npos);
  Outcome v = invoke({"verify", path("d3.txt"), path("d3.txt.basis")});
  EXPECT_EQ(v.code, kExitOk);
  Outcome c = invoke({"gen", "cycle-basis", "18", "--json"});
  EXPECT_NE(c.out.find("\"basis\""), std::string::npos);
}

TEST_F(CliTest, VerifyPathOfEight) {
  invoke({"gen", "path", "8", "-o", path("p8.txt")});
  write("good", "0\n2\n5\n7\n");
  write("bad", "0\n2\n5\n");
  write("all", "0\n1\n2\n3\n4\n5\n6\n7\n");
  Outcome good = invoke({"verify", path("p8.txt"), path("good"), "--rank-vectors"});
  EXPECT_EQ(good.code, kExitOk);
  EXPECT_NE(good.out.find("valid"), std::string::npos);
  EXPECT_NE(good.out.find("r(1) = {0,2}<5<7"), std::string::npos);
  Outcome bad = invoke({"verify", path("p8.txt"), path("bad")});
  EXPECT_EQ(bad.code, kExitViolation);
  EXPECT_NE(bad.out.find("invalid"), std::string::npos);
  EXPECT_EQ(invoke({"verify", path("p8.txt"), path("all")}).code, kExitOk);
}

TEST_F(CliTest, CdExactAndApprox) {
  invoke({"gen", "path", "8", "-o", path("p8.txt")});
  Outcome exact = invoke({"cd", "exact", path("p8.txt")});
  EXPECT_EQ(exact.code, kExitOk);
  EXPECT_NE(exact.out.find("cd 4"), std::string::npos);
  invoke({"gen", "fig2a", "-o", path("f.txt")});
  EXPECT_NE(invoke({"cd", "exact", path("f.txt")}).out.find("cd 3"), std::string::npos);
  invoke({"gen", "cycle", "18", "-o", path("c18.txt")});
  Outcome approx = invoke({"cd", "approx", path("c18.txt")});
  EXPECT_EQ(approx.code, kExitOk);
  EXPECT_NE(approx.out.find("bounds"), std::string::npos);
  Outcome capped = invoke({"cd", "exact", path("c18.txt"), "--size-cap", "2"});
  EXPECT_NE(capped.out.find("uncertified"), std::string::npos);
}

TEST_F(CliTest, ReportsAreDeterministicModuloWallTime) {
  invoke({"gen", "cycle", "12", "-o", path("c.txt")});
  auto strip = [](const std::string& s) {
    return std::regex_replace(s, std::regex("\"wall_time_ms\": [0-9.e+-]+"), "");
  };
  Outcome a = invoke({"cd", "approx", path("c.txt"), "--json"});
  Outcome b = invoke({"cd", "approx", path("c.txt"), "--json"});
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_NE(a.out.find("input_digest"), std::string::npos);
}

TEST_F(CliTest, Bounds) {
  invoke({"gen", "path", "8", "-o", path("p8.txt")});
  Outcome r = invoke({"bounds", path("p8.txt"), "--exact"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_NE(r.out.find("bell"), std::string::npos);
}

TEST_F(CliTest, SweepSmall) {
  Outcome r = invoke({"sweep", "5"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind(csv_header(), 0), 0u);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 1 + 1 + 2 + 6 + 21);
  Outcome ext = invoke({"sweep", "5", "--only-extremal"});
  EXPECT_NE(ext.out.find("T_n"), std::string::npos);
  Outcome sample = invoke({"sweep", "--sample", "5", "--n", "9", "--p", "0.4",
                           "--seed", "3"});
  EXPECT_EQ(sample.code, kExitOk) << sample.err;
  EXPECT_EQ(sample.out, invoke({"sweep", "--sample", "5", "--n", "9", "--p",
                                "0.4", "--seed", "3"})
                            .out);
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(invoke({"sweep", "8"}).code, kExitInputError);
  EXPECT_EQ(invoke({"cd", "exact", path("missing.txt")}).code, kExitInputError);
  EXPECT_EQ(invoke({"cd", "fastest", path("x")}).code, kExitInputError);
  EXPECT_EQ(invoke({"gen", "nonsense", "3"}).code, kExitInputError);
  EXPECT_EQ(invoke({}).code, kExitInputError);
  write("bad.txt", "0 x\n");
  EXPECT_EQ(invoke({"cd", "exact", path("bad.txt")}).code, kExitInputError);
  write("split.txt", "n 4\n0 1\n2 3\n");
  EXPECT_EQ(invoke({"cd", "exact", path("split.txt")}).code, kExitInputError);
}

TEST(Sha256Test, KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace cdim::cli
