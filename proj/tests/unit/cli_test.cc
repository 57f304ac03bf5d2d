// Copyright 2026 The structctl Authors.
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


#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"
#include "structctl/io.h"

namespace structctl::cli {
namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return ::testing::TempDir() + "/" + name;
}

std::string Slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

const std::string kRingExample = std::string(STRUCTCTL_TEST_DATA) + "/ring4.json";

// Two states, one input with an empty column.
const char* kNoInputEdges = R"({
  "subsystems": [{"id": 0, "n": 2, "p": 1, "A": [[1, 0]], "B": []}],
  "connections": []
})";

const char* kSimilarNoInputEdges = R"({
  "similar": {"r": 2, "n": 2, "p": 1, "Aprime": [[1, 0]], "Bprime": [],
              "H": [[1, 1]], "E": [[0, 1], [1, 0]]}
})";

// Subsystem 0 feeds both 1 and 2.
const char* kFan = R"({
  "subsystems": [
    {"id": 0, "n": 1, "p": 1, "A": [], "B": [[0, 0]]},
    {"id": 1, "n": 1, "p": 0, "A": [], "B": []},
    {"id": 2, "n": 1, "p": 0, "A": [], "B": []}],
  "connections": [
    {"to": 1, "from": 0, "E": [[0, 0]]},
    {"to": 2, "from": 0, "E": [[0, 0]]}]
})";

TEST(CliVerifyTest, UnusedInputGivesUnreachedWitness) {
  const std::string path = TempPath("no_input.json");
  WriteText(path, kNoInputEdges);
  for (const char* mode : {"centralized", "distributed", "serial"}) {
    const Outcome o = Invoke({"verify", "--mode", mode, "--input", path});
    EXPECT_EQ(o.code, kExitNo) << mode;
    const json report = json::parse(o.out);
    EXPECT_EQ(report["witness"]["unreached"], json({"x0@0", "x1@0"})) << mode;
  }
  WriteText(path, kSimilarNoInputEdges);
  for (const char* mode : {"similar-thm1", "similar-thm2", "centralized"}) {
    const Outcome o = Invoke({"verify", "--mode", mode, "--input", path});
    EXPECT_EQ(o.code, kExitNo) << mode;
    EXPECT_TRUE(json::parse(o.out)["witness"].contains("unreached")) << mode;
  }
  std::remove(path.c_str());
}

TEST(CliVerifyTest, RingExampleDistributed) {
  const Outcome o = Invoke({"verify", "--mode", "distributed", "--input", kRingExample});
  ASSERT_EQ(o.code, kExitYes) << o.err;
  const json report = json::parse(o.out);
  EXPECT_EQ(report["reachability"]["iterations"], 4);
  EXPECT_EQ(report["prd"]["t_inflow"], 16);
  EXPECT_TRUE(report["prd"]["within_beta_squared"].get<bool>());
  EXPECT_NE(o.err.find("structurally controllable: yes"), std::string::npos);
}

TEST(CliVerifyTest, RingExampleCentralized) {
  const Outcome o = Invoke({"verify", "--mode", "centralized", "--input", kRingExample});
  ASSERT_EQ(o.code, kExitYes) << o.err;
  const json report = json::parse(o.out);
  EXPECT_TRUE(report["numeric_probe"]["full_rank"].get<bool>());
  EXPECT_TRUE(report.contains("certificate"));
}

TEST(CliVerifyTest, SerialModeNamesOffenders) {
  const std::string path = TempPath("fan.json");
  WriteText(path, kFan);
  const Outcome o = Invoke({"verify", "--mode", "serial", "--input", path});
  EXPECT_EQ(o.code, kExitError);
  const json report = json::parse(o.out);
  EXPECT_EQ(report["error"], "not_serial");
  EXPECT_EQ(report["offenders"], json({0}));
  const Outcome flipped = Invoke({"verify", "--mode", "serial", "--serial-variant",
                                  "outgoing", "--input", path});
  EXPECT_NE(flipped.code, kExitError) << flipped.out;
  std::remove(path.c_str());
}

TEST(CliVerifyTest, MalformedInputIsAParseError) {
  const std::string path = TempPath("bad.json");
  WriteText(path, R"({"subsystems": [{"id": 0, "n": 1, "p": 0, "A": [[3, 0]], "B": []}], "connections": []})");
  const Outcome o = Invoke({"verify", "--input", path});
  EXPECT_EQ(o.code, kExitError);
  const json report = json::parse(o.out);
  EXPECT_EQ(report["error"], "parse");
  EXPECT_NE(report["message"].get<std::string>().find("$.subsystems[0].A[0]"),
            std::string::npos);
  EXPECT_EQ(Invoke({"verify", "--mode", "bogus", "--input", path}).code, kExitError);
  std::remove(path.c_str());
}

TEST(CliVerifyTest, ModesAgreeOnGeneratedSystems) {
  const std::string path = TempPath("agree.json");
  for (int seed = 0; seed < 30; ++seed) {
    ASSERT_EQ(Invoke({"gen", "--r", "4", "--n", "1-5", "--p", "1", "--b-density", "0.4",
                      "--serial", "--seed", std::to_string(seed), "--out", path})
                  .code,
              kExitYes);
    const int central = Invoke({"verify", "--mode", "centralized", "--input", path}).code;
    const int distributed =
        Invoke({"verify", "--mode", "distributed", "--input", path}).code;
    const int serial = Invoke({"verify", "--mode", "serial", "--input", path}).code;
    EXPECT_EQ(central, distributed) << "seed " << seed;
    EXPECT_NE(central, kExitError) << "seed " << seed;
    if (serial == kExitYes) {
      EXPECT_EQ(central, kExitYes) << "seed " << seed;
    }
  }
  std::remove(path.c_str());
}

TEST(CliGenTest, SameSeedSameFile) {
  const std::string a = TempPath("gen_a.json");
  const std::string b = TempPath("gen_b.json");
  const std::vector<std::string> args = {"gen", "--r", "4", "--n", "2-5", "--seed", "9"};
  std::vector<std::string> with_a = args;
  with_a.insert(with_a.end(), {"--out", a});
  std::vector<std::string> with_b = args;
  with_b.insert(with_b.end(), {"--out", b});
  ASSERT_EQ(Invoke(with_a).code, kExitYes);
  ASSERT_EQ(Invoke(with_b).code, kExitYes);
  EXPECT_EQ(Slurp(a), Slurp(b));
  EXPECT_EQ(LoadSystem(a).num_subsystems(), 4);
  EXPECT_EQ(Invoke({"gen", "--serial", "--similar", "--out", a}).code, kExitError);
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST(CliGenTest, SimilarFilesVerify) {
  const std::string path = TempPath("similar.json");
  ASSERT_EQ(Invoke({"gen", "--similar", "--r", "3", "--seed", "4", "--out", path}).code,
            kExitYes);
  const Outcome o = Invoke({"verify", "--mode", "centralized", "--input", path});
  EXPECT_NE(o.code, kExitError) << o.out;
  const Outcome thm = Invoke({"verify", "--mode", "similar-thm2", "--input", path});
  EXPECT_TRUE(json::parse(thm.out).contains("status") ||
              json::parse(thm.out).contains("precondition"))
      << thm.out;
  std::remove(path.c_str());
}

TEST(CliTraceTest, RecordsAndFilters) {
  const std::string trace = TempPath("ring.jsonl");
  ASSERT_EQ(Invoke({"verify", "--mode", "distributed", "--fig5-simplify", "--input",
                    kRingExample, "--trace", trace})
                .code,
            kExitYes);
  const Outcome all = Invoke({"trace", "--input", trace});
  ASSERT_EQ(all.code, kExitYes) << all.out;
  const Outcome round0 = Invoke({"trace", "--input", trace, "--round", "0"});
  const Outcome agent2 = Invoke({"trace", "--input", trace, "--agent", "2"});
  EXPECT_LT(round0.out.size(), all.out.size());
  EXPECT_LT(agent2.out.size(), all.out.size());
  EXPECT_EQ(round0.out.find("round 1 "), std::string::npos);
  std::remove(trace.c_str());
}

TEST(CliTraceTest, EmptyAndMalformedFiles) {
  const std::string path = TempPath("empty.jsonl");
  WriteText(path, "");
  const Outcome empty = Invoke({"trace", "--input", path, "--round", "0"});
  EXPECT_EQ(empty.code, kExitYes);
  EXPECT_EQ(empty.out, "");
  WriteText(path, "{\"round\": 0}\n");
  EXPECT_EQ(Invoke({"trace", "--input", path}).code, kExitError);
  WriteText(path, "not json\n");
  EXPECT_EQ(Invoke({"trace", "--input", path}).code, kExitError);
  std::remove(path.c_str());
}

}  // namespace
}  // namespace structctl::cli
