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

#ifndef SOFTABS_TOOLS_CLI_H_
#define SOFTABS_TOOLS_CLI_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "softabs/report.h"

namespace softabs::cli {

enum class Format { kText, kJson };

struct CommandRequest {
  // solve | translate | recover | check | verify | bench
  std::string command;
  std::string problem;
  std::string mapping;
  std::string semiring;
  std::string gamma;
  std::string property;
  std::string theorem;
  // Where verify writes a reproducer on failure; empty means the current
  // directory.
  std::string out;
  std::size_t trials = 1000;
  std::uint64_t seed = 0x5EED5EEDull;
  unsigned jobs = 1;
  Budget budget;
  // Matrix shape for the sum_of_products check.
  std::size_t m = 1;
  std::size_t n = 1;
  Format format = Format::kJson;
};

struct RunReport {
  // {"command": ..., ...}; never contains timing except for bench.
  nlohmann::json payload;
  std::string text;
  int exit_code = 0;  // 0 ok, 1 violation, 2 input error
  double elapsed_seconds = 0;
};

// "samples=64,set_size=2,..." applied over `base`. Keys: samples, set_pool,
// set_size, max_evaluations, seed. Throws InputError on anything else.
Budget ParseBudget(std::string_view spec, Budget base = {});

RunReport Run(const CommandRequest& req);

}  // namespace softabs::cli

#endif  // SOFTABS_TOOLS_CLI_H_
