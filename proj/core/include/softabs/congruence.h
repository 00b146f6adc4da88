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

#ifndef SOFTABS_CONGRUENCE_H_
#define SOFTABS_CONGRUENCE_H_

#include <optional>
#include <string_view>
#include <vector>

#include "softabs/errors.h"
#include "softabs/mapping.h"
#include "softabs/semiring.h"

namespace softabs {

// Blocks of carrier elements. Must cover a finite carrier exactly once.
using Partition = std::vector<std::vector<Value>>;

enum class Operation { kSum, kProd };
std::string_view OperationName(Operation op);

// a ~ a2 and b ~ b2, but op(a, b) and op(a2, b2) land in different blocks.
struct CongruenceWitness {
  Operation op = Operation::kSum;
  Value a, a2, b, b2;
};

struct CongruenceCheck {
  bool ok = true;
  std::optional<CongruenceWitness> witness;
};

// Both throw InputError when `p` does not cover the carrier exactly once.
CongruenceCheck CheckBlockRespect(const Semiring& s, const Partition& p,
                                  Operation op);
// Sum first, then product.
CongruenceCheck IsCongruence(const Semiring& s, const Partition& p);

class NotACongruence : public Error {
 public:
  explicit NotACongruence(CongruenceWitness w);
  const CongruenceWitness& witness() const { return witness_; }

 private:
  CongruenceWitness witness_;
};

struct QuotientResult {
  SemiringPtr semiring;
  MappingPtr natural;
};

// S/~ as a table semiring whose elements are named after their blocks, e.g.
// "[{b}|{c}|{b,c}]", plus the natural map. Blocks are ordered by their
// smallest member. Throws NotACongruence with a witness.
QuotientResult Quotient(const SemiringPtr& s, const Partition& p);

// Blocks of equal images, in order of first appearance.
Partition KernelPartition(const Mapping& m);

}  // namespace softabs

#endif  // SOFTABS_CONGRUENCE_H_
