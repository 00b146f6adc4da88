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

#ifndef SOFTABS_REPORT_H_
#define SOFTABS_REPORT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "softabs/value.h"

namespace softabs {

enum class Verdict { kPass, kFail, kSampledPass };

std::string_view VerdictName(Verdict v);

// Which carrier a witness value lives in.
enum class Side { kSource, kTarget };

struct WitnessEntry {
  std::string label;
  Side side = Side::kSource;
  Value value;
};

// Outcome of a property or axiom check. A failing report always carries
// concrete witness values that reproduce the violation when re-evaluated.
struct PropertyReport {
  std::string property;
  Verdict verdict = Verdict::kPass;
  // Name of the violated clause on failure ("idempotency", "sum", ...).
  std::string reason;
  std::vector<WitnessEntry> witness;
  std::uint64_t evaluated = 0;
  bool exhaustive = true;
  std::string note;

  bool ok() const { return verdict != Verdict::kFail; }
  const Value* Find(std::string_view label) const;
  // Values whose label starts with `prefix`, in witness order.
  std::vector<Value> Collect(std::string_view prefix) const;
};

// Limits for exhaustive scans and the fallback sampling regime.
struct Budget {
  // Number of sampled carrier values when a carrier is infinite or too large
  // to enumerate.
  std::size_t samples = 256;
  // Pool size used for set-quantified properties over sampled carriers.
  std::size_t set_pool = 16;
  // Largest multiset size for order-preserving and aggregation checks.
  std::size_t set_size = 3;
  // Maximum elementary evaluations for an exhaustive scan.
  std::uint64_t max_evaluations = 10'000'000;
  std::uint64_t seed = 0x5EED5EEDull;
};

}  // namespace softabs

#endif  // SOFTABS_REPORT_H_
