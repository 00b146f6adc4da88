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
// Property certification for semiring mappings.
//
// Finite sources are scanned exhaustively. Set- and matrix-quantified
// properties are reduced to the finite set of achievable (concrete, abstract)
// value pairs, built up one factor at a time, so their verdicts stay exact
// for the stated size bounds. Infinite sources fall back to seeded pools and
// report kSampledPass.
//
// Witness labels:
//   "a", "b"          source elements
//   "y"               target element
//   "I1[i]", "I2[i]"  members of the two multisets
//   "U[i][j]", "V[i][j]"  matrix entries (row i is a product, rows are summed)

#ifndef SOFTABS_PROPERTY_H_
#define SOFTABS_PROPERTY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "softabs/mapping.h"
#include "softabs/report.h"

namespace softabs {

// Checks `which` for alpha. `gamma` is required for galois_insertion,
// order_preserving and abstraction (PreconditionError otherwise);
// order_preserving additionally refuses pairs that are not Galois
// insertions. aggregation_compatible needs totally ordered source and target.
// Set-quantified properties range over nonempty multisets of size at most
// budget.set_size.
PropertyReport CheckProperty(const Mapping& alpha, PropertyKind which,
                             const Mapping* gamma = nullptr,
                             const Budget& budget = {});

// For all n x m matrices U, V over the source:
//   sum_i prod_j alpha(U[i][j]) < sum_i prod_j alpha(V[i][j])
//     implies  sum_i prod_j U[i][j] < sum_i prod_j V[i][j].
// With m = n = 1 this is order reflection. Throws PreconditionError when m or
// n is zero.
PropertyReport CheckSumOfProducts(const Mapping& alpha, std::size_t m,
                                  std::size_t n, const Budget& budget = {});

// Re-evaluates a failing report from its witness alone. True when the
// witness is a genuine violation of the named clause.
bool ConfirmViolation(const Mapping& alpha, const PropertyReport& report,
                      const Mapping* gamma = nullptr);

struct AdjointSearch {
  std::optional<GaloisPair> pair;
  // A target element y whose preimage-downset {x : alpha(x) <= y} has no
  // maximum; set exactly when `pair` is empty.
  std::optional<Value> missing;
};

// gamma(y) = max {x : alpha(x) <= y}. Both carriers must be finite and small;
// alpha must be monotonic (PreconditionError otherwise).
AdjointSearch FindUpperAdjoint(const MappingPtr& alpha);

// All isomorphisms s -> t. Throws PreconditionError when a carrier is
// infinite or larger than `bound`.
std::vector<MappingPtr> IsomorphismScan(const SemiringPtr& s,
                                        const SemiringPtr& t,
                                        std::size_t bound = 5);

}  // namespace softabs

#endif  // SOFTABS_PROPERTY_H_
