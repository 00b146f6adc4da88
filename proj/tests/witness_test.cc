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

#include <gtest/gtest.h>

#include "oracles.h"
#include "softabs/abstraction.h"
#include "softabs/errors.h"

namespace softabs {
namespace {

void ExpectConstant(const SolutionTable& sol, const Value& v) {
  for (const Value& x : sol.values) EXPECT_EQ(x, v);
}

TEST(Witness, SumPairSolvesToTheSum) {
  auto b = MakeBoolean();
  auto sys = WitnessSystem(b);
  WitnessPair w = WitnessSumProblem(sys, Value::Bool(false), Value::Bool(true), {0});
  ExpectConstant(Solve(w.p), Value::Bool(true));
  ExpectConstant(Solve(w.q), Value::Bool(true));

  auto ps = MakePowerset({"a", "b", "c"});
  auto psys = WitnessSystem(ps);
  WitnessPair s = WitnessSumProblem(psys, Value::Set(2), Value::Set(4), {0});
  ExpectConstant(Solve(s.p), Value::Set(6));
  ExpectConstant(Solve(s.q), Value::Set(6));
  EXPECT_EQ(oracle::Solve(s.p), oracle::Solve(s.q));
}

TEST(Witness, SumPairExposesABrokenSum) {
  auto ps = MakePowerset({"a", "b"});
  auto b = MakeBoolean();
  // Only the full set maps to true: {a} + {b} is not preserved.
  auto alpha = MakeTableMapping(
      ps, b, std::vector<Value>{Value::Bool(false), Value::Bool(false),
                                Value::Bool(false), Value::Bool(true)});
  WitnessPair w = WitnessSumProblem(WitnessSystem(ps), Value::Set(1), Value::Set(2), {0});
  EXPECT_EQ(Solve(w.p).values, Solve(w.q).values);
  EXPECT_NE(Solve(Translate(*alpha, w.p)).values, Solve(Translate(*alpha, w.q)).values);
}

TEST(Witness, ProdPairSolvesToTheProduct) {
  auto ps = MakePowerset({"a", "b", "c"});
  auto sys = WitnessSystem(ps);
  WitnessPair w = WitnessProdProblem(sys, Value::Set(3), Value::Set(6), {0});
  ExpectConstant(Solve(w.p), Value::Set(2));
  ExpectConstant(Solve(w.q), Value::Set(2));

  SetsExample ex = MakeSetsExample();
  WitnessPair v = WitnessProdProblem(sys, Value::Set(2), Value::Set(4), {0});
  ExpectConstant(Solve(Translate(*ex.alpha, v.p)), Value::Set(2));
  ExpectConstant(Solve(Translate(*ex.alpha, v.q)), Value::Set(0));
}

TEST(Witness, ProdPairWithOne) {
  auto f = MakeFuzzy();
  auto sys = WitnessSystem(f);
  Value h = Value::Unit(Rational(1, 3));
  WitnessPair w = WitnessProdProblem(sys, f->one(), h, {0});
  ExpectConstant(Solve(w.p), h);
  ExpectConstant(Solve(w.q), h);
}

TEST(Witness, Preconditions) {
  auto b = MakeBoolean();
  EXPECT_THROW(WitnessSumProblem(WitnessSystem(b, 1, 1), b->zero(), b->one(), {0}),
               PreconditionError);
  EXPECT_THROW(WitnessSumProblem(WitnessSystem(b), b->zero(), b->one(), {}),
               PreconditionError);
  EXPECT_THROW(WitnessProdProblem(WitnessSystem(b), b->zero(), b->one(), {0, 1}),
               PreconditionError);
  EXPECT_THROW(WitnessSumOfProductsProblem(b, {{b->one()}}, {}), PreconditionError);
  EXPECT_THROW(WitnessSumOfProductsProblem(b, {{b->one()}, {}}, {{b->one()}, {b->one()}}),
               PreconditionError);
}

TEST(Witness, SumOfProductsSingleEntry) {
  auto f = MakeFuzzy();
  Value u = Value::Unit(Rational(1, 4));
  Value v = Value::Unit(Rational(2, 3));
  Problem p = WitnessSumOfProductsProblem(f, {{u}}, {{v}});
  SolutionTable sol = Solve(p);
  EXPECT_EQ(sol.con, Scope{0});
  EXPECT_EQ(sol.values, (std::vector<Value>{u, v}));
}

TEST(Witness, SumOfProductsMatchesDirectEvaluation) {
  auto s = MakePowerset({"a", "b", "c"});
  Rng rng(11);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 3; ++m) {
      std::vector<std::vector<Value>> u(n), v(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          u[i].push_back(s->Sample(rng));
          v[i].push_back(s->Sample(rng));
        }
      }
      auto eval = [&](const std::vector<std::vector<Value>>& x) {
        Value total = s->zero();
        for (const auto& row : x) {
          Value p = s->one();
          for (const Value& e : row) p = s->Prod(p, e);
          total = s->Sum(total, p);
        }
        return total;
      };
      SolutionTable sol = Solve(WitnessSumOfProductsProblem(s, u, v));
      ASSERT_GE(sol.values.size(), 2u);
      EXPECT_EQ(sol.values[0], eval(u));
      EXPECT_EQ(sol.values[1], eval(v));
      for (std::size_t k = 2; k < sol.values.size(); ++k) {
        EXPECT_EQ(sol.values[k], s->zero());
      }
    }
  }
}

}  // namespace
}  // namespace softabs
