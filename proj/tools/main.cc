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

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cli.h"
#include "softabs/errors.h"

int main(int argc, char** argv) {
  namespace cli = softabs::cli;
  CLI::App app{"softabs: soft constraint solving and semiring abstraction"};
  app.require_subcommand(1);

  cli::CommandRequest req;
  std::string budget;
  std::string format = "json";
  std::string out;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", req.seed, "Random seed");
    sub->add_option("--budget", budget,
                    "Check budget, e.g. samples=256,set_size=3 "
                    "(default from SOFTABS_BUDGET)");
    sub->add_option("--jobs", req.jobs, "Worker threads")
        ->check(CLI::Range(1u, 256u));
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out, "Write output here instead of stdout");
  };

  auto* solve = app.add_subcommand("solve", "Solve a problem");
  solve->add_option("--problem", req.problem, "Problem file")->required();
  add_common(solve);

  auto* translate = app.add_subcommand("translate", "Translate a problem");
  translate->add_option("--problem", req.problem, "Problem file")->required();
  translate->add_option("--mapping", req.mapping, "Mapping file")->required();
  add_common(translate);

  auto* recover = app.add_subcommand(
      "recover", "Solve abstractly, then pick concrete optima");
  recover->add_option("--problem", req.problem, "Problem file")->required();
  recover->add_option("--mapping", req.mapping, "Mapping file")->required();
  add_common(recover);

  auto* check = app.add_subcommand("check", "Check a mapping property");
  check->add_option("--property", req.property,
                    "Property name, sum_of_products, or axioms")
      ->required();
  check->add_option("--mapping", req.mapping, "Mapping file");
  check->add_option("--gamma", req.gamma, "Upper adjoint mapping file");
  check->add_option("--semiring", req.semiring,
                    "Semiring file or built-in name (for axioms)");
  check->add_option("--m", req.m, "Products per row (sum_of_products)");
  check->add_option("--n", req.n, "Rows (sum_of_products)");
  add_common(check);

  auto* verify = app.add_subcommand("verify", "Verify a theorem");
  verify->add_option("--theorem", req.theorem, "Theorem id")->required();
  verify->add_option("--trials", req.trials, "Random trials");
  add_common(verify);

  auto* bench = app.add_subcommand("bench", "Time the solver");
  bench->add_option("--semiring", req.semiring, "Semiring file or name");
  bench->add_option("--trials", req.trials, "Instances per size (max 5)");
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  req.command = app.get_subcommands().front()->get_name();
  req.format = format == "text" ? cli::Format::kText : cli::Format::kJson;
  try {
    if (const char* env = std::getenv("SOFTABS_BUDGET")) {
      req.budget = cli::ParseBudget(env, req.budget);
    }
    req.budget = cli::ParseBudget(budget, req.budget);
  } catch (const softabs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  // For verify, --out names the reproducer directory.
  if (req.command == "verify") req.out = out;

  cli::RunReport r = cli::Run(req);
  const std::string body = req.format == cli::Format::kJson
                               ? r.payload.dump(2) + "\n"
                               : r.text;
  if (!out.empty() && req.command != "verify") {
    std::ofstream(out) << body;
  } else {
    (r.exit_code == 2 && req.format == cli::Format::kText ? std::cerr
                                                          : std::cout)
        << body;
  }
  return r.exit_code;
}
