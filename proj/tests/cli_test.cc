// Copyright 2026 The cutstrength Authors
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

#include "cutstrength/cli.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cutstrength {
namespace {

using nlohmann::json;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

constexpr const char* kT2 = R"({"type":"type2","a":["1/2","3/2"]})";

TEST(CliTest, BoundExample) {
  const CliRun r = Invoke({"bound", "--body", kT2, "--z", "7/4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["bound"], "32/81");
  EXPECT_EQ(j["z"], "7/4");
  EXPECT_EQ(j["exact"], false);
  EXPECT_NE(r.out.find(R"("bound": "32/81")"), std::string::npos);
}

TEST(CliTest, BoundCsv) {
  const CliRun r = Invoke({"bound", "--body", kT2, "--z", "7/4", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "z,bound\n7/4,32/81\n");
}

TEST(CliTest, Type1BoundIsExact) {
  const CliRun r = Invoke({"bound", "--body", R"({"type":"type1"})", "--z", "7/4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["bound"], "1/3");
  EXPECT_EQ(j["exact"], true);
}

TEST(CliTest, PlotdataZ32) {
  const CliRun r = Invoke({"plotdata", "--curve", "z32"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "w,bound");
  EXPECT_NE(r.out.find("\n11/10,112/121\n"), std::string::npos);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 101);
}

TEST(CliTest, PlotdataZ2) {
  const CliRun r = Invoke({"plotdata", "--curve", "z2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\n11/10,4/121\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n2,1\n"), std::string::npos);
}

TEST(CliTest, StrengthType1ClosureN1) {
  const CliRun r = Invoke({"strength", "--body", R"({"type":"type1"})", "--f",
                        R"(["3/5","3/5"])", "--N", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["t_N"], "2");
  EXPECT_EQ(j["region"], "R1");
  EXPECT_TRUE(j["chosen_split"].is_null());
}

TEST(CliTest, StrengthType2) {
  const CliRun r = Invoke({"strength", "--body", kT2, "--f", "9/20,6/5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["region"], "R5");
  EXPECT_EQ(j["t_bar"], "29/9");
}

TEST(CliTest, ClassifyAndWidth) {
  CliRun r = Invoke({"classify", "--body", R"({"vertices":[[0,0],[2,0],[0,2]]})"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["class"], "Type1Triangle");
  r = Invoke({"width", "--body", kT2});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["w"], "3/2");
}

TEST(CliTest, MonteCarloReportsClosedForm) {
  const CliRun r = Invoke({"montecarlo", "--body", kT2, "--z", "7/4", "--samples",
                        "20000", "--seed", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["closed_form"], "32/81");
  EXPECT_EQ(j["samples"], 20000);
  EXPECT_EQ(j["seed"], 4);
  EXPECT_LT(std::abs(j["deviation_std_errors"].get<double>()), 4);
  EXPECT_EQ(Invoke({"montecarlo", "--body", kT2, "--z", "7/4", "--samples",
                    "20000", "--seed", "4"})
                .out,
            r.out);
}

TEST(CliTest, SweepDefaultsToCsv) {
  const CliRun r = Invoke({"sweep", "--family", "type2", "--grid", "w=3/2,2", "--z", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out,
            "params,w,z,bound,mc_estimate,mc_stderr,samples,seed\n"
            "w=2,2,2,0,,,,\n"
            "w=3/2,3/2,2,5/9,,,,\n");
}

TEST(CliTest, BodyFileAndOutput) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto in = dir / "cutstrength_cli_body.json";
  const auto out = dir / "cutstrength_cli_out.json";
  std::ofstream(in) << kT2;
  const CliRun r = Invoke({"bound", "--body-file", in.string(), "--z", "7/4",
                        "--output", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(out);
  EXPECT_EQ(json::parse(file)["bound"], "32/81");
  std::filesystem::remove(in);
  std::filesystem::remove(out);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bound", "--z", "2"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"bound", "--body", kT2, "--body-file", "x", "--z", "2"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"bound", "--body", kT2, "--z", "2", "--format", "xml"}).code,
            kExitUsage);
  EXPECT_EQ(Invoke({"strength", "--body", kT2, "--f", "0,0", "--N", "51"}).code,
            kExitUsage);
}

TEST(CliTest, ValidationErrors) {
  EXPECT_EQ(Invoke({"bound", "--body", kT2, "--z", "1"}).code, kExitValidation);
  EXPECT_EQ(Invoke({"bound", "--body", kT2, "--z", "x"}).code, kExitValidation);
  EXPECT_EQ(Invoke({"bound", "--body", "{", "--z", "2"}).code, kExitValidation);
  EXPECT_EQ(Invoke({"bound", "--body", R"({"type":"type2","a":["1/2","1"]})",
                    "--z", "2"})
                .code,
            kExitValidation);
  EXPECT_EQ(Invoke({"strength", "--body", kT2, "--f", "5,5"}).code,
            kExitValidation);
  EXPECT_EQ(Invoke({"montecarlo", "--body", kT2, "--z", "2", "--samples", "0"}).code,
            kExitUsage);
  const CliRun r = Invoke({"width", "--body-file", "/nonexistent/body.json"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
}  // namespace cutstrength
