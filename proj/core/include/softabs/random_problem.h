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

#ifndef SOFTABS_RANDOM_PROBLEM_H_
#define SOFTABS_RANDOM_PROBLEM_H_

#include <cstdint>

#include "softabs/scsp.h"

namespace softabs {

struct RandomProblemOptions {
  std::size_t min_vars = 1;
  std::size_t max_vars = 4;
  std::size_t min_domain = 1;
  std::size_t max_domain = 3;
  std::size_t max_constraints = 4;
  std::size_t max_arity = 3;
  // Infinite carriers draw from a palette this large (plus 0 and 1) so that
  // ties and incomparable optima actually occur.
  std::size_t palette = 4;
};

// A generator seeded from (seed, index), so trial i is reproducible on its
// own and independent of scheduling.
Rng TrialRng(std::uint64_t seed, std::uint64_t index);

// Variables v1.., domain d1.., a random con and random distinct scopes.
Problem RandomProblem(const SemiringPtr& s, Rng& rng,
                      const RandomProblemOptions& opts = {});

// A second problem over the same system and con whose constraints sit
// pointwise above those of `p` (same scopes).
Problem RaiseProblem(const Problem& p, Rng& rng);

}  // namespace softabs

#endif  // SOFTABS_RANDOM_PROBLEM_H_
