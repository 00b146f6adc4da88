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

#include "softabs/witness.h"

#include <algorithm>

#include "softabs/errors.h"

namespace softabs {

namespace {

std::vector<std::string> Names(const char* prefix, std::size_t first,
                               std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(prefix + std::to_string(first + i));
  }
  return out;
}

VarId Spare(const ConstraintSystem& sys, const Scope& con) {
  for (VarId v = 0; v < sys.variables().size(); ++v) {
    if (!std::binary_search(con.begin(), con.end(), v)) return v;
  }
  throw PreconditionError("no variable outside the problem type");
}

}  // namespace

SystemPtr WitnessSystem(SemiringPtr s, std::size_t k, std::size_t n) {
  std::vector<std::string> vars = Names("y", 1, k);
  vars.push_back("x");
  return std::make_shared<ConstraintSystem>(std::move(s), Names("d", 1, n),
                                            std::move(vars));
}

WitnessPair WitnessSumProblem(const SystemPtr& system, const Value& a,
                              const Value& b, const Scope& con) {
  const Semiring& s = *system->semiring();
  s.CheckMember(a);
  s.CheckMember(b);
  const std::size_t d = system->domain_size();
  if (d < 2) throw PreconditionError("need at least two domain values");
  if (con.empty()) throw PreconditionError("problem type is empty");
  const VarId x = Spare(*system, con);
  const VarId y = con.front();
  Scope scope{std::min(x, y), std::max(x, y)};
  std::vector<Value> table;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) table.push_back(i == j ? a : b);
  }
  WitnessPair w{
      MakeProblem(system, {Constraint(scope, std::move(table), d)}, con),
      MakeProblem(system, {Constraint::Constant(s.Sum(a, b), scope, d)}, con),
      "sum " + s.Format(a) + " + " + s.Format(b)};
  return w;
}

WitnessPair WitnessProdProblem(const SystemPtr& system, const Value& a,
                               const Value& b, const Scope& con) {
  const Semiring& s = *system->semiring();
  s.CheckMember(a);
  s.CheckMember(b);
  const std::size_t d = system->domain_size();
  const VarId x = Spare(*system, con);
  std::vector<Constraint> pc{Constraint::Constant(a, {x}, d),
                             Constraint::Constant(b, con, d)};
  return WitnessPair{
      MakeProblem(system, std::move(pc), con),
      MakeProblem(system, {Constraint::Constant(s.Prod(a, b), con, d)}, con),
      "product " + s.Format(a) + " x " + s.Format(b)};
}

Problem WitnessSumOfProductsProblem(
    const SemiringPtr& s, const std::vector<std::vector<Value>>& u,
    const std::vector<std::vector<Value>>& v) {
  const std::size_t n = u.size();
  if (n == 0 || v.size() != n) {
    throw PreconditionError("matrices must have the same positive row count");
  }
  const std::size_t m = u[0].size();
  if (m == 0) throw PreconditionError("matrices need at least one column");
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].size() != m || v[i].size() != m) {
      throw PreconditionError("matrices must be rectangular and equal shape");
    }
    for (std::size_t j = 0; j < m; ++j) {
      s->CheckMember(u[i][j]);
      s->CheckMember(v[i][j]);
    }
  }
  const std::size_t d = std::max<std::size_t>(n, 2);
  const std::size_t k = std::max<std::size_t>(m, 3);
  auto system = std::make_shared<ConstraintSystem>(s, Names("d", 1, d),
                                                   Names("x", 0, k + 1));
  std::vector<Constraint> cs;
  for (std::size_t j = 1; j <= m; ++j) {
    Scope scope;
    for (VarId x = 0; x <= k; ++x) {
      if (x != j) scope.push_back(x);
    }
    const std::size_t count = TupleCount(d, scope.size());
    std::vector<Value> table(count, s->zero());
    for (std::size_t idx = 0; idx < count; ++idx) {
      Assignment t = TupleAt(idx, d, scope.size());
      const std::uint32_t head = t[0];
      const std::uint32_t row = t[1];
      bool uniform = std::all_of(t.begin() + 1, t.end(),
                                 [&](std::uint32_t e) { return e == row; });
      if (!uniform || row >= n) continue;
      if (head == 0) table[idx] = u[row][j - 1];
      if (head == 1) table[idx] = v[row][j - 1];
    }
    cs.emplace_back(std::move(scope), std::move(table), d);
  }
  return MakeProblem(std::move(system), std::move(cs), Scope{0});
}

SetsExample MakeSetsExample() {
  SemiringPtr s = MakePowerset({"a", "b", "c"});
  SemiringPtr t = MakePowerset({"p", "q"});
  std::vector<Value> images;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    std::uint64_t img = 0;
    if (bits & 1) img |= 1;
    if (bits & 6) img |= 2;
    images.push_back(Value::Set(img));
  }
  MappingPtr alpha = MakeTableMapping(s, t, std::move(images));
  auto system = std::make_shared<const ConstraintSystem>(
      s, std::vector<std::string>{"d1", "d2"},
      std::vector<std::string>{"x1", "x2"});
  const Value a = Value::Set(1), b = Value::Set(2), c = Value::Set(4);
  std::vector<Constraint> cs{Constraint({0}, {a, b}, 2),
                             Constraint({1}, {a, c}, 2)};
  return {MakeProblem(std::move(system), std::move(cs), Scope{0, 1}),
          std::move(alpha)};
}

}  // namespace softabs
