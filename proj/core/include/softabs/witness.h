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
// Problems built to expose a mapping that fails to preserve sums, products
// or strict order of sums of products.

#ifndef SOFTABS_WITNESS_H_
#define SOFTABS_WITNESS_H_

#include <string>
#include <vector>

#include "softabs/mapping.h"
#include "softabs/scsp.h"

namespace softabs {

// Two problems with identical solutions, P and Q.
struct WitnessPair {
  Problem p;
  Problem q;
  std::string claim;
};

// Variables y1..yk followed by one spare variable x, domain d1..dn.
SystemPtr WitnessSystem(SemiringPtr s, std::size_t k = 1, std::size_t n = 2);

// P: one constraint over {x, y1}, a where x = y1 and b elsewhere.
// Q: one constraint over {x, y1}, constantly a + b.
// Both solve to the constant a + b on con. Needs a nonempty con, a variable
// outside con and at least two domain values (PreconditionError otherwise).
WitnessPair WitnessSumProblem(const SystemPtr& system, const Value& a,
                              const Value& b, const Scope& con);

// P: a unary constraint a on the spare variable and a constant b over con.
// Q: a constant a x b over con. Both solve to the constant a x b. Needs a
// variable outside con.
WitnessPair WitnessProdProblem(const SystemPtr& system, const Value& a,
                               const Value& b, const Scope& con);

// Problem with con = {x0} whose solution maps (d1) to sum_i prod_j U[i][j],
// (d2) to sum_i prod_j V[i][j] and everything else to 0. U and V are n x m.
// Uses max(n, 2) domain values and variables x0..xK with K = max(m, 3):
// constraint j ranges over every variable except xj and is nonzero only when
// x1..xK (minus xj) all equal some d_i. Throws PreconditionError on ragged or
// mismatched matrices.
Problem WitnessSumOfProductsProblem(
    const SemiringPtr& s, const std::vector<std::vector<Value>>& u,
    const std::vector<std::vector<Value>>& v);

// Powerset{a,b,c} -> powerset{p,q} sending {a} to {p}, anything else inside
// {b,c} to {q} and anything meeting both {a} and {b,c} to {p,q}. Sums are
// preserved, products only bounded. The problem has c1(x1) = {a},{b} and
// c2(x2) = {a},{c} over d1,d2 with con = {x1, x2}: its only optimum is
// (d1,d1) while the translation also has (d2,d2) optimal, with concrete
// value empty.
struct SetsExample {
  Problem problem;
  MappingPtr alpha;
};
SetsExample MakeSetsExample();

}  // namespace softabs

#endif  // SOFTABS_WITNESS_H_
