// Copyright 2026 The softabs Authors.
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

#include "cli.h"

#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "softabs/errors.h"

namespace softabs::cli {
namespace {

using nlohmann::json;

const std::string kData = SOFTABS_DATA_DIR;

// Test bodies shadow Run with testing::Test::Run.
RunReport Exec(const CommandRequest& req) { return cli::Run(req); }

CommandRequest Req(std::string command) {
  CommandRequest r;
  r.command = std::move(command);
  return r;
}

TEST(Cli, SolveSetsExample) {
  CommandRequest req = Req("solve");
  req.problem = kData + "/sets.json";
  RunReport r = Exec(req);
  ASSERT_EQ(r.exit_code, 0) << r.text;
  EXPECT_EQ(r.payload["command"], "solve");
  ASSERT_EQ(r.payload["optimal"].size(), 1u);
  EXPECT_EQ(r.payload["optimal"][0]["assignment"], (json{{"x1", "d1"}, {"x2", "d1"}}));
  EXPECT_NE(r.text.find("optimal: (d1,d1)"), std::string::npos);
}

TEST(Cli, SolveIsIdenticalAcrossThreadCounts) {
  CommandRequest req = Req("solve");
  req.problem = kData + "/weighted-chain.json";
  std::string one = Exec(req).payload.dump(2);
  req.jobs = 8;
  EXPECT_EQ(Exec(req).payload.dump(2), one);
}

TEST(Cli, Translate) {
  CommandRequest req = Req("translate");
  req.problem = kData + "/sets.json";
  req.mapping = kData + "/sets-alpha.json";
  RunReport r = Exec(req);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(r.payload["endpoints"].get<bool>());
  EXPECT_EQ(r.payload["problem"]["constraints"].size(), 2u);
}

TEST(Cli, RecoverSetsExample) {
  CommandRequest req = Req("recover");
  req.problem = kData + "/sets.json";
  req.mapping = kData + "/sets-alpha.json";
  RunReport r = Exec(req);
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["guarantee"], "quasi-only");
  ASSERT_EQ(r.payload["abstract_optimal"].size(), 2u);
  EXPECT_EQ(r.payload["abstract_optimal"][1]["concrete"], json::array());
  EXPECT_EQ(r.payload["abstract_optimal"][1]["abstract"], json::array({"q"}));
  ASSERT_EQ(r.payload["selected"].size(), 1u);
  EXPECT_EQ(r.payload["selected"][0]["assignment"], (json{{"x1", "d1"}, {"x2", "d1"}}));
}

TEST(Cli, CheckProperties) {
  CommandRequest req = Req("check");
  req.mapping = kData + "/sets-alpha.json";
  req.property = "homomorphism";
  RunReport r = Exec(req);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.payload["reason"], "product");
  EXPECT_EQ(r.payload["witness"]["a"], json::array({"b"}));
  EXPECT_EQ(r.payload["witness"]["b"], json::array({"c"}));

  req.property = "quasi_homomorphism";
  EXPECT_EQ(Exec(req).exit_code, 0);

  req.property = "order_preserving";
  r = Exec(req);
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_TRUE(r.payload.contains("gamma"));

  req.mapping = kData + "/identity.json";
  req.property = "isomorphism";
  EXPECT_EQ(Exec(req).exit_code, 0);
}

TEST(Cli, CheckAxioms) {
  CommandRequest req = Req("check");
  req.property = "axioms";
  req.semiring = "boolean";
  RunReport r = Exec(req);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.payload["verdict"], "pass");
  req.semiring = "fuzzy";
  EXPECT_EQ(Exec(req).payload["verdict"], "sampled-pass");
}

TEST(Cli, VerifyWritesNothingOnSuccess) {
  auto dir = std::filesystem::temp_directory_path() / "softabs_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  CommandRequest req = Req("verify");
  req.theorem = "recovery";
  req.trials = 30;
  req.out = dir.string();
  RunReport r = Exec(req);
  EXPECT_EQ(r.exit_code, 0) << r.text;
  EXPECT_TRUE(std::filesystem::is_empty(dir));
  std::string one = r.payload.dump(2);
  req.jobs = 8;
  EXPECT_EQ(Exec(req).payload.dump(2), one);
}

TEST(Cli, InputErrorsExitWithTwo) {
  CommandRequest req = Req("solve");
  req.problem = kData + "/missing.json";
  RunReport r = Exec(req);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_TRUE(r.payload.contains("error"));

  req = Req("recover");
  req.problem = kData + "/sets.json";
  req.mapping = kData + "/sets-kernel.json";
  r = Exec(req);
  EXPECT_EQ(r.exit_code, 2);

  req = Req("check");
  req.mapping = kData + "/identity.json";
  req.property = "nonsense";
  EXPECT_EQ(Exec(req).exit_code, 2);

  req = Req("verify");
  req.theorem = "nope";
  r = Exec(req);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(r.payload["location"], "/theorem");

  EXPECT_EQ(Exec(Req("frobnicate")).exit_code, 2);
  EXPECT_EQ(Exec(Req("solve")).exit_code, 2);
}

TEST(Cli, BudgetSyntax) {
  Budget b = ParseBudget("samples=12,set_size=2");
  EXPECT_EQ(b.samples, 12u);
  EXPECT_EQ(b.set_size, 2u);
  EXPECT_EQ(b.set_pool, Budget{}.set_pool);
  EXPECT_THROW(ParseBudget("samples"), InputError);
  EXPECT_THROW(ParseBudget("colour=3"), InputError);
  EXPECT_THROW(ParseBudget("samples=-1"), InputError);
}

}  // namespace
}  // namespace softabs::cli
