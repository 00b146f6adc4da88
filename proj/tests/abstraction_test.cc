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

#include "softabs/abstraction.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "softabs/catalog.h"
#include "softabs/errors.h"
#include "softabs/property.h"
#include "softabs/random_problem.h"
#include "softabs/witness.h"

namespace softabs {
namespace {

TEST(Translate, KeepsTheShapeAndMapsEveryEntry) {
  SetsExample ex = MakeSetsExample();
  Problem a = Translate(*ex.alpha, ex.problem);
  EXPECT_TRUE(a.system->semiring()->SameAs(*ex.alpha->target()));
  EXPECT_EQ(a.system->variables(), ex.problem.system->variables());
  EXPECT_EQ(a.system->domain(), ex.problem.system->domain());
  EXPECT_EQ(a.con, ex.problem.con);
  ASSERT_EQ(a.constraints.size(), ex.problem.constraints.size());
  for (std::size_t k = 0; k < a.constraints.size(); ++k) {
    const auto& c = ex.problem.constraints[k];
    EXPECT_EQ(a.constraints[k].scope(), c.scope());
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(a.constraints[k].table()[i], ex.alpha->Apply(c.table()[i]));
    }
  }
  EXPECT_THROW(Translate(*MakeIdentity(MakeBoolean()), ex.problem), PreconditionError);
}

// For a homomorphism, solving commutes with translation.
TEST(Translate, HomomorphismsCommuteWithSolving) {
  const auto& homs = CatalogHomomorphisms(4);
  const auto& cat = Catalog();
  for (std::size_t h = 0; h < homs.size(); ++h) {
    const Mapping& m = *homs[h].map;
    for (std::uint64_t i = 0; i < 5; ++i) {
      Rng rng = TrialRng(h, i);
      Problem p = RandomProblem(cat[homs[h].source].semiring, rng);
      SolutionTable conc = Solve(p);
      SolutionTable abs = Solve(Translate(m, p));
      for (std::size_t k = 0; k < conc.values.size(); ++k) {
        ASSERT_EQ(m.Apply(conc.values[k]), abs.values[k]) << m.Name();
      }
    }
  }
}

TEST(Recover, SetsExampleIsQuasiOnly) {
  SetsExample ex = MakeSetsExample();
  RecoveryResult r = RecoverOptima(*ex.alpha, ex.problem);
  EXPECT_EQ(r.guarantee, Guarantee::kQuasiOnly);
  EXPECT_EQ(r.abstract_optimal, (std::vector<std::size_t>{0, 3}));
  EXPECT_EQ(r.concrete_values,
            (std::vector<Value>{Value::Set(1), Value::Set(0)}));
  EXPECT_EQ(r.abstract_values,
            (std::vector<Value>{Value::Set(1), Value::Set(2)}));
  EXPECT_EQ(r.selected, std::vector<std::size_t>{0});
  EXPECT_EQ(r.consistent, std::vector<bool>{true});

  EXPECT_TRUE(QuasiBoundCheck(*ex.alpha, ex.problem).ok());
  PropertyReport strong = StrongBoundCheck(*ex.alpha, ex.problem);
  ASSERT_FALSE(strong.ok());
  EXPECT_EQ(*strong.Find("v"), Value::Set(0));
  EXPECT_EQ(*strong.Find("v~"), Value::Set(2));
}

TEST(Recover, IdentityRecoversEverything) {
  SetsExample ex = MakeSetsExample();
  auto id = MakeIdentity(ex.problem.system->semiring());
  RecoveryResult r = RecoverOptima(*id, ex.problem);
  EXPECT_EQ(r.guarantee, Guarantee::kHomomorphism);
  EXPECT_EQ(r.abstract_optimal, r.concrete.optimal);
  EXPECT_EQ(r.selected, r.concrete.optimal);
  EXPECT_TRUE(StrongBoundCheck(*id, ex.problem).ok());
}

TEST(Recover, FuzzyToBooleanThreshold) {
  auto th = MakeThreshold(MakeFuzzy(), MakeBoolean(), Value::Unit(Rational(1, 2)),
                          Value::Bool(false), Value::Bool(true));
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = TrialRng(3, i);
    Problem p = RandomProblem(MakeFuzzy(), rng);
    RecoveryResult r = RecoverOptima(*th, p);
    EXPECT_EQ(r.guarantee, Guarantee::kHomomorphism);
    auto opt = oracle::Optima(p);
    ASSERT_FALSE(r.selected.empty());
    for (std::size_t t : r.selected) {
      EXPECT_TRUE(opt.count(r.concrete.TupleAt(t))) << "trial " << i;
    }
    for (bool c : r.consistent) EXPECT_TRUE(c);
  }
}

TEST(Recover, Preconditions) {
  SetsExample ex = MakeSetsExample();
  auto s = ex.problem.system->semiring();
  std::vector<Value> images;
  for (const Value& v : s->Elements()) images.push_back(v == s->one() ? s->zero() : v);
  auto broken = MakeTableMapping(s, s, images);
  EXPECT_THROW(RecoverOptima(*broken, ex.problem), PreconditionError);
  Problem empty{ex.problem.system, {}, ex.problem.con};
  EXPECT_THROW(RecoverOptima(*MakeIdentity(s), empty), PreconditionError);
  auto b = MakeBoolean();
  auto top = MakeTableMapping(
      s, b, std::vector<Value>(s->Elements().size(), Value::Bool(true)));
  // Not even endpoint preserving, so the quasi bound refuses it.
  EXPECT_THROW(QuasiBoundCheck(*top, ex.problem), PreconditionError);
}

}  // namespace
}  // namespace softabs
