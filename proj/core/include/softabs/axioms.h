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

#ifndef SOFTABS_AXIOMS_H_
#define SOFTABS_AXIOMS_H_

#include <cstddef>
#include <vector>

#include "softabs/report.h"
#include "softabs/semiring.h"

namespace softabs {

// The carrier, or a seeded sample of it. Sampled pools always contain zero
// and one and carry exhaustive == false.
struct CarrierPool {
  std::vector<Value> values;
  bool exhaustive = true;
};

// Enumerates the carrier when it is finite and its size raised to `arity`
// fits `budget.max_evaluations`; otherwise draws `sample_count` seeded
// values (at least 2 for zero and one).
CarrierPool MakePool(const Semiring& s, const Budget& budget,
                     std::size_t arity, std::size_t sample_count);

// Certifies the c-semiring axioms and the facts about the induced order:
// sum commutativity, sum associativity, sum unit, idempotency, sum
// absorption, product commutativity, product associativity, product unit,
// product absorption, distributivity, reflexivity, antisymmetry,
// transitivity, bottom, top, least upper bound, monotonicity, and greatest
// lower bound (only when the product is idempotent). Checks run in that
// order; the first violation is reported with its witness values labelled
// "a", "b", "c".
PropertyReport CheckAxioms(const Semiring& s, const Budget& budget = {});

}  // namespace softabs

#endif  // SOFTABS_AXIOMS_H_
