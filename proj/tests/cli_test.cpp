// Copyright 2026 The bregman-geometry Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bregman/cli.hpp"
#include "json.hpp"

namespace bregman::cli {
namespace {

using Json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json parse_ok(const Outcome& o) {
  EXPECT_EQ(o.code, 0) << o.err;
  return Json::parse(o.out);
}

class ScopedConfig {
 public:
  explicit ScopedConfig(const std::string& text) : path_(testing::TempDir() + "bregman_cli_config.json") {
    std::ofstream(path_) << text;
    setenv("BREGMAN_CONFIG", path_.c_str(), 1);
  }
  ~ScopedConfig() {
    unsetenv("BREGMAN_CONFIG");
    std::remove(path_.c_str());
  }

 private:
  std::string path_;
};

TEST(Cli, DistanceExample) {
  const Json j = parse_ok(call({"distance", "--fn", "neglog", "--x", "1", "--y", "2"}));
  EXPECT_NEAR(j["value"].get<double>(), 0.19314718056, 1e-11);
}

TEST(Cli, SegmentLeftCenterIsMidpoint) {
  const Json j = parse_ok(call({"center", "--side", "left", "--fn", "entropy", "--set",
                                R"({"segment":{"c0":[1,3],"c1":[3,1]}})"}));
  EXPECT_NEAR(j["center"][0].get<double>(), 2.0, 1e-9);
  EXPECT_NEAR(j["center"][1].get<double>(), 2.0, 1e-9);
  EXPECT_TRUE(j["trace"]["converged"].get<bool>());
  EXPECT_LE(j["certificate"]["residual"].get<double>(), 1e-6);
}

TEST(Cli, StepChebyshevPoint) {
  const Json j = parse_ok(call({"proxpoint", "--g", "step01", "--mu", "1", "--op", "cheb"}));
  EXPECT_DOUBLE_EQ(j["point"].get<double>(), 0.25);
  const Json k = parse_ok(call({"proxpoint", "--g", "step01", "--mu", "0.1", "--op", "cheb"}));
  EXPECT_DOUBLE_EQ(k["point"].get<double>(), 0.4);
}

TEST(Cli, ProxOps) {
  const Json env = parse_ok(call({"proxpoint", "--g", "q", "--lambda", "1", "--op", "env", "--x", "2"}));
  EXPECT_DOUBLE_EQ(env["value"].get<double>(), 1.0);
  const Json p = parse_ok(call({"proxpoint", "--g", "indicator01", "--mu", "1", "--op", "Q", "--x", "0.5"}));
  EXPECT_TRUE(p["ties"].get<bool>());
  const Json t = parse_ok(call({"proxpoint", "--g", "q", "--op", "thresholds"}));
  EXPECT_EQ(t["lambda_g"], "inf");
  EXPECT_DOUBLE_EQ(t["mu_g"].get<double>(), 1.0);
}

TEST(Cli, NearestTieReportsBothAttainers) {
  const Json j = parse_ok(call({"project", "--fn", "energy", "--set", R"({"finite":[[0],[2]]})", "--point", "1"}));
  EXPECT_EQ(j["map"], "left_nearest");
  EXPECT_EQ(j["attainers"].size(), 2u);
  EXPECT_TRUE(j["ties"].get<bool>());
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args = {"probe", "--kind", "scan", "--fn", "entropy", "--set",
                                         R"({"finite":[[1],[2],[5]]})", "--grid",
                                         R"({"lo":[0.5],"hi":[6],"resolution":50})", "--jobs", "3"};
  const Outcome a = call(args);
  const Outcome b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(Json::accept(a.out));
}

TEST(Cli, SelftestJsonIsReproducible) {
  const Outcome a = call({"selftest", "--format", "json", "--jobs", "2"});
  const Outcome b = call({"selftest", "--format", "json", "--jobs", "1"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["criteria"].size(), 10u);
}

TEST(Cli, ProbeCsvHasVersionedHeader) {
  const Outcome o = call({"probe", "--kind", "scan", "--fn", "energy", "--set", R"({"interval":[0,1]})",
                          "--grid", R"({"lo":[-1],"hi":[2],"resolution":4})", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  std::istringstream lines(o.out);
  std::string first;
  std::string second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first, "# bregman probe csv v1");
  EXPECT_EQ(second, "map,x0,value,tie");
  std::size_t rows = 0;
  for (std::string row; std::getline(lines, row);) ++rows;
  EXPECT_EQ(rows, 16u);
}

TEST(Cli, ParseErrorsCarryAFieldPath) {
  const Outcome o = call({"center", "--side", "left", "--fn", "entropy", "--set", R"({"segment":{"c0":[1,3]}})"});
  EXPECT_EQ(o.code, kExitParse);
  EXPECT_TRUE(o.out.empty());
  const Json e = Json::parse(o.err);
  EXPECT_EQ(e["error"]["kind"], "parse");
  EXPECT_NE(e["error"]["path"].get<std::string>().find("set.segment"), std::string::npos);

  EXPECT_EQ(call({"distance", "--fn", "cosh", "--x", "1", "--y", "2"}).code, kExitParse);
  EXPECT_EQ(call({"distance", "--fn", "energy", "--x", "[1", "--y", "2"}).code, kExitParse);
  EXPECT_EQ(call({"nosuchcommand"}).code, kExitParse);
  EXPECT_EQ(call({"distance", "--fn", "energy", "--x", "[1,2]", "--y", "2"}).code, kExitParse);
}

TEST(Cli, DomainErrors) {
  const Outcome o = call({"project", "--fn", "entropy", "--set", R"({"interval":[1,2]})", "--point", "-1"});
  EXPECT_EQ(o.code, kExitDomain);
  EXPECT_EQ(Json::parse(o.err)["error"]["kind"], "domain");
  EXPECT_EQ(call({"proxpoint", "--g", "q", "--mu", "0.5", "--op", "phi", "--x", "0"}).code, kExitDomain);
}

TEST(Cli, SetOutsideDomainIsAParseError) {
  const Outcome o = call({"center", "--fn", "neglog", "--set", R"({"interval":[-1,2]})"});
  EXPECT_EQ(o.code, kExitParse);
  EXPECT_EQ(Json::parse(o.err)["error"]["path"], "set.interval");
}

TEST(Cli, DistanceOffDomainIsInfinity) {
  const Json j = parse_ok(call({"distance", "--fn", "entropy", "--x", "-1", "--y", "2"}));
  EXPECT_EQ(j["value"], "inf");
}

TEST(Cli, ConfigFillsOnlyMissingFlags) {
  const std::vector<std::string> args = {"project", "--fn", "energy", "--set", R"({"finite":[[0],[2]]})",
                                         "--point", "1.0000001"};
  EXPECT_FALSE(parse_ok(call(args))["ties"].get<bool>());
  {
    ScopedConfig cfg(R"({"tie_tol": 1e-3})");
    const Json j = parse_ok(call(args));
    EXPECT_TRUE(j["ties"].get<bool>());
    EXPECT_DOUBLE_EQ(j["tie_tol"].get<double>(), 1e-3);
    std::vector<std::string> with_flag = args;
    with_flag.insert(with_flag.end(), {"--tie-tol", "1e-12"});
    EXPECT_FALSE(parse_ok(call(with_flag))["ties"].get<bool>());
  }
  {
    ScopedConfig cfg(R"({"tie_tol": 1e-12, "project": {"tie_tol": 1e-3}})");
    EXPECT_TRUE(parse_ok(call(args))["ties"].get<bool>());
  }
  {
    ScopedConfig cfg("not json");
    EXPECT_EQ(call(args).code, kExitParse);
  }
}

}  // namespace
}  // namespace bregman::cli
