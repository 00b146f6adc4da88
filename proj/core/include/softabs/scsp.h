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
// Soft constraint problems over a c-semiring.
//
// Variables are numbered by their position in the system's variable list and
// scopes are kept sorted in that order. Domain values are numbered by their
// position in the domain list. Tables are dense, in lexicographic tuple order
// with the first scope variable most significant.

#ifndef SOFTABS_SCSP_H_
#define SOFTABS_SCSP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "softabs/semiring.h"

namespace softabs {

using VarId = std::uint32_t;
using Scope = std::vector<VarId>;
// Domain indices, one per variable of some scope.
using Assignment = std::vector<std::uint32_t>;

class ConstraintSystem {
 public:
  // Throws InputError for an empty domain, or duplicate domain or variable
  // names.
  ConstraintSystem(SemiringPtr semiring, std::vector<std::string> domain,
                   std::vector<std::string> variables);

  const SemiringPtr& semiring() const { return semiring_; }
  const std::vector<std::string>& domain() const { return domain_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t domain_size() const { return domain_.size(); }

  // Both throw InputError for unknown names.
  VarId Var(const std::string& name) const;
  std::uint32_t DomainIndex(const std::string& name) const;
  // Sorted, duplicate-free scope from names.
  Scope MakeScope(const std::vector<std::string>& names) const;

  // Same semiring, domain and variables.
  bool SameAs(const ConstraintSystem& other) const;

 private:
  SemiringPtr semiring_;
  std::vector<std::string> domain_;
  std::vector<std::string> variables_;
};

using SystemPtr = std::shared_ptr<const ConstraintSystem>;

// d^k, throwing PreconditionError when it does not fit in size_t.
std::size_t TupleCount(std::size_t d, std::size_t k);
// The i-th k-tuple in lexicographic order.
Assignment TupleAt(std::size_t index, std::size_t d, std::size_t k);

class Constraint {
 public:
  // Throws InputError unless `scope` is strictly increasing and `table` has
  // d^|scope| entries.
  Constraint(Scope scope, std::vector<Value> table, std::size_t domain_size);

  static Constraint Constant(const Value& v, Scope scope,
                             std::size_t domain_size);
  static Constraint Trivial(const Semiring& s, Scope scope,
                            std::size_t domain_size);

  const Scope& scope() const { return scope_; }
  const std::vector<Value>& table() const { return table_; }
  std::size_t domain_size() const { return domain_size_; }
  std::size_t size() const { return table_.size(); }

  std::size_t Offset(std::span<const std::uint32_t> t) const;
  const Value& At(std::span<const std::uint32_t> t) const {
    return table_[Offset(t)];
  }
  bool IsTrivial(const Semiring& s) const;

  friend bool operator==(const Constraint&, const Constraint&) = default;

 private:
  Scope scope_;
  std::vector<Value> table_;
  std::size_t domain_size_;
};

struct Problem {
  SystemPtr system;
  std::vector<Constraint> constraints;
  Scope con;

  const Semiring& semiring() const { return *system->semiring(); }
};

// Throws InputError when two constraints share a scope, a scope or con
// mentions an unknown variable, or a table value is outside the carrier.
Problem MakeProblem(SystemPtr system, std::vector<Constraint> constraints,
                    Scope con);

struct SolutionTable {
  Scope con;
  std::size_t domain_size = 0;
  std::vector<Value> values;
  // Positions of the maximal values, ascending; never empty.
  std::vector<std::size_t> optimal;

  Assignment TupleAt(std::size_t index) const;
  std::vector<Assignment> OptimalTuples() const;
};

// t restricted to the variables of y, in y's order. Throws PreconditionError
// unless every variable of y occurs in x.
Assignment ProjectTuple(std::span<const std::uint32_t> t, const Scope& x,
                        const Scope& y);

// Throws PreconditionError for an empty list.
Constraint Combine(const Semiring& s, std::span<const Constraint> cs);
// Sums out every variable of c outside `keep`.
Constraint Project(const Semiring& s, const Constraint& c, const Scope& keep);

// (c* x (x)C) projected on con, by enumeration of every assignment of the
// variables in con and all scopes. `jobs` > 1 splits the enumeration into
// contiguous chunks whose partial tables are merged in chunk order.
SolutionTable Solve(const Problem& p, unsigned jobs = 1);
std::vector<Assignment> Optimals(const Problem& p);

// Throws PreconditionError on scope mismatch.
bool ConstraintBelow(const Semiring& s, const Constraint& c1,
                     const Constraint& c2);
// Set extension of the constraint ordering, per scope: either both problems
// constrain it and c1 is below c2, or the second problem leaves it
// unconstrained or trivially constrained. Throws PreconditionError for
// different systems or problem types.
bool ProblemBelow(const Problem& p1, const Problem& p2);
bool ProblemEqual(const Problem& p1, const Problem& p2);

}  // namespace softabs

#endif  // SOFTABS_SCSP_H_
