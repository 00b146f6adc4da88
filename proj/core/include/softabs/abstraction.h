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

#ifndef SOFTABS_ABSTRACTION_H_
#define SOFTABS_ABSTRACTION_H_

#include <string_view>
#include <vector>

#include "softabs/mapping.h"
#include "softabs/report.h"
#include "softabs/scsp.h"

namespace softabs {

// Same variables, domain, scopes and con; every table value passed through
// alpha. Throws PreconditionError when alpha's source is not the problem's
// semiring.
Problem Translate(const Mapping& alpha, const Problem& p);

enum class Guarantee { kHomomorphism, kQuasiOnly, kNone };
std::string_view GuaranteeName(Guarantee g);

struct RecoveryResult {
  SolutionTable concrete;
  SolutionTable abstract;
  // Tuple indices (into the con-tuple order) optimal in the translated
  // problem, ascending.
  std::vector<std::size_t> abstract_optimal;
  // Sol(P) and Sol(alpha(P)) at each abstract optimum.
  std::vector<Value> concrete_values;
  std::vector<Value> abstract_values;
  // Abstract optima whose concrete value is maximal among them; nonempty
  // subset of abstract_optimal.
  std::vector<std::size_t> selected;
  Guarantee guarantee = Guarantee::kNone;
  // Per selected tuple: alpha(Sol(P)(t)) == Sol(alpha(P))(t).
  std::vector<bool> consistent;
};

// Solves alpha(P), evaluates its optima in P and keeps the best. Selected
// tuples are optimal in P whenever alpha is a homomorphism; for weaker maps
// the result is still returned with the guarantee withheld. Throws
// PreconditionError when alpha does not preserve 0 and 1, or P has no
// constraints.
RecoveryResult RecoverOptima(const Mapping& alpha, const Problem& p,
                             unsigned jobs = 1);

// For every abstract optimum t (abstract value v~, concrete value v), some
// concrete optimum with value w >= v has alpha(w) not strictly above v~.
// Witness on failure: "t" (tuple index as an element value) and "v~".
// Throws PreconditionError unless alpha is a quasi-homomorphism.
PropertyReport QuasiBoundCheck(const Mapping& alpha, const Problem& p);

// The stronger variant: some such optimum has alpha(w) <= v~.
PropertyReport StrongBoundCheck(const Mapping& alpha, const Problem& p);

}  // namespace softabs

#endif  // SOFTABS_ABSTRACTION_H_
