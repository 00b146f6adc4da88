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

#ifndef SOFTABS_SHRINK_H_
#define SOFTABS_SHRINK_H_

#include <functional>
#include <string>

#include <nlohmann/json.hpp>

#include "softabs/mapping.h"
#include "softabs/scsp.h"

namespace softabs {

using FailurePredicate = std::function<bool(const Problem&)>;

// Greedy reduction of a failing problem: drop constraints, drop variables
// from con, drop unused variables, drop domain values, then flatten table
// entries to 0 or 1. Each step is kept only if `fails` still holds. The
// predicate must hold for `p`.
Problem Shrink(const Problem& p, const FailurePredicate& fails);

// {"claim": ..., "mapping": descriptor, "problem": problem}
nlohmann::json Reproducer(const Problem& p, const Mapping& alpha,
                          const std::string& claim);

}  // namespace softabs

#endif  // SOFTABS_SHRINK_H_
