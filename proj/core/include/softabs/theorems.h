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
//
// Randomized and exhaustive verification of the abstraction results. Each
// check names the claim it exercises:
//
//   ordering_sufficiency    homomorphisms preserve problem ordering
//   ordering_necessity      non-homomorphisms break it on the sum/product
//                           witness problems
//   optima_preservation     order-reflecting homomorphisms keep every
//                           optimum optimal, and every other endpoint map
//                           has a witness problem where this fails
//   recovery                abstract-then-recover returns true optima
//   quasi_bound             the bound for quasi-homomorphisms, and the
//                           stronger bound refuted on the two-sets example
//   order_preserving_scan   an order-preserving Galois insertion is exactly
//                           an isomorphism
//   aggregation_homomorphism  on chains, aggregation compatibility is
//                           exactly being a homomorphism
//   chain_reflection        monotone maps out of chains reflect order
//   chain_optima            homomorphisms out of chains keep optima optimal

#ifndef SOFTABS_THEOREMS_H_
#define SOFTABS_THEOREMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "softabs/random_problem.h"
#include "softabs/report.h"

namespace softabs {

struct TheoremOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0x5EED5EEDull;
  // Catalog bound for the randomized parts and for exhaustive scans.
  std::size_t max_carrier = 6;
  std::size_t scan_carrier = 4;
  RandomProblemOptions problems;
  Budget budget;
  unsigned jobs = 1;
};

struct TheoremReport {
  // property is the theorem id; a failure's reason is the violated claim.
  PropertyReport report;
  std::uint64_t trials = 0;  // random instances checked
  std::uint64_t cases = 0;   // mappings scanned or witnesses built
  std::string summary;
  // Minimized counterexample (see Reproducer), present on failure.
  std::optional<nlohmann::json> reproducer;
};

const std::vector<std::string>& TheoremIds();

// Throws InputError for an unknown id and PreconditionError when the
// options exceed the catalog or problem bounds.
TheoremReport VerifyTheorem(std::string_view id, const TheoremOptions& opts = {});

nlohmann::json TheoremReportToJson(const TheoremReport& r);

}  // namespace softabs

#endif  // SOFTABS_THEOREMS_H_
