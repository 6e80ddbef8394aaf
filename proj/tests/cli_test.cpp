// Copyright 2026 The strongirr Authors
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

#include <random>
#include <sstream>

#include "strongirr/cli.hpp"
#include "strongirr/strongirr.hpp"
#include "test_support.hpp"

namespace strongirr {
namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), in, out, err);
  return {code, out.str(), err.str()};
}

report::Json json(std::vector<std::string> args, const std::string& input = "") {
  args.push_back("--json");
  return report::Json::parse(run(std::move(args), input).out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check-irred", "x1^2 + 1"}).code, 0);
  EXPECT_EQ(run({"check-irred", "x1^2 - 1"}).code, 1);
  EXPECT_EQ(run({"check-strong-irred", "x1*x2 - 1"}).code, 1);
  EXPECT_EQ(run({"check-coprime", "--p", "x1 + 3", "--q", "2"}).code, 0);
  EXPECT_EQ(run({"check-coprime", "--p", "x1 + 3", "--q", "x2 - 2"}).code, 2);
  EXPECT_EQ(run({"check-irred", "1 + + x1"}).code, 3);
  EXPECT_EQ(run({"check-irred"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"check-irred", "--no-such-flag", "x1"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"gen-family", "--family", "F1", "--k", "1,2"}).code, 3);
  EXPECT_EQ(run({"check-strong-irred", "x1^3 + x2^3 + x3^3 + x1*x2*x3 + 1", "--gb-steps", "0"}).code, 4);
}

TEST(Cli, ParseErrorsCarryPosition) {
  auto r = run({"check-irred", "1 + + x1"});
  EXPECT_NE(r.err.find("column"), std::string::npos) << r.err;
  auto j = json({"check-irred", "1 + + x1"});
  EXPECT_EQ(j["exit_code"], 3);
  EXPECT_EQ(j["error"]["kind"], "input");
  EXPECT_FALSE(j.contains("result"));
}

TEST(Cli, JsonReportShape) {
  auto j = json({"check-strong-irred", "--family", "F1", "--k", "1,1"});
  EXPECT_EQ(j["command"], "check-strong-irred");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(j["result"]["verdict"]["status"], "PROVED");
  EXPECT_EQ(j["result"]["verdict"]["rule"], "criterion");
  EXPECT_TRUE(j["timing"]["elapsed_ms"].is_number());

  auto r = json({"check-strong-irred", "x1*x2 - 1"});
  EXPECT_EQ(r["result"]["verdict"]["witness"]["verified"], true);
  EXPECT_EQ(r["result"]["verdict"]["witness"]["substitution"], (std::vector<int>{2, 2}));
}

TEST(Cli, StdinInput) {
  auto j = json({"check-irred", "--stdin"}, "x1^2 + 1\n");
  EXPECT_EQ(j["result"]["input"], "x1^2 + 1");
  auto m = json({"torsion-alex", "--stdin"}, R"({"vars":1,"matrix":[["x1^2 - x1 + 1"]]})");
  EXPECT_EQ(m["result"]["delta"], "x1^2 - x1 + 1");
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> cmds{
      {"braid-alex", "--braid", "s1 s2^-1 s1 s2^-1", "--strands", "3"},
      {"reduce-ideal", "--p", "1 + x1 - x2", "--q", "x1*x2 - 3", "--gens", "1,3;2,1"},
      {"genericity", "--trials", "50", "--seed", "3"},
  };
  for (const auto& c : cmds) EXPECT_EQ(run(c).out, run(c).out);
}

TEST(Cli, PrintedPolynomialsParseBack) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const bool laurent = i % 2 == 1;
    auto p = testing_support::random_poly(rng, Ring{3, laurent}, 5, 3, 40);
    if (p.is_zero()) continue;
    auto back = parse_int_polynomial(to_string(p), {.laurent = laurent, .nvars = 3});
    ASSERT_EQ(back, p) << to_string(p);
  }
}

}  // namespace
}  // namespace strongirr
