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

#include "softabs/scsp.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "softabs/errors.h"
#include "softabs/random_problem.h"
#include "softabs/witness.h"

namespace softabs {
namespace {

Value W(std::int64_t n) { return Value::Weighted(Weight::Of(Rational(n))); }
Value Inf() { return Value::Weighted(Weight::Infinity()); }

SystemPtr WeightedSystem(std::size_t vars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < vars; ++i) names.push_back("x" + std::to_string(i + 1));
  return std::make_shared<ConstraintSystem>(MakeWeighted(),
                                            std::vector<std::string>{"d1", "d2"},
                                            names);
}

TEST(Tuples, LastVariableVariesFastest) {
  EXPECT_EQ(TupleCount(3, 2), 9u);
  EXPECT_EQ(TupleCount(5, 0), 1u);
  EXPECT_EQ(TupleAt(5, 3, 2), (Assignment{1, 2}));
  EXPECT_EQ(TupleAt(0, 2, 0), Assignment{});
  Scope x{0, 2, 5};
  Assignment t{7, 8, 9};
  EXPECT_EQ(ProjectTuple(t, x, Scope{2, 5}), (Assignment{8, 9}));
  EXPECT_EQ(ProjectTuple(t, x, Scope{}), Assignment{});
}

TEST(Combine, WeightedByHand) {
  auto sys = WeightedSystem(2);
  const Semiring& s = *sys->semiring();
  std::vector<Constraint> cs{Constraint({0}, {W(1), W(3)}, 2),
                             Constraint({0, 1}, {W(0), W(2), W(5), Inf()}, 2)};
  Constraint c = Combine(s, cs);
  EXPECT_EQ(c.scope(), (Scope{0, 1}));
  EXPECT_EQ(c.table(), (std::vector<Value>{W(1), W(3), W(8), Inf()}));
  Constraint px = Project(s, c, {0});
  EXPECT_EQ(px.table(), (std::vector<Value>{W(1), W(8)}));
  Constraint py = Project(s, c, {1});
  EXPECT_EQ(py.table(), (std::vector<Value>{W(1), W(3)}));
  Constraint none = Project(s, c, {});
  EXPECT_EQ(none.table(), std::vector<Value>{W(1)});
  // Variables outside the scope are ignored.
  EXPECT_EQ(Project(s, c, {0, 2}).table(), px.table());
}

TEST(Combine, NeedsSomethingToCombine) {
  auto sys = WeightedSystem(1);
  EXPECT_THROW(Combine(*sys->semiring(), std::vector<Constraint>{}), Error);
}

TEST(Solve, SetsExample) {
  SetsExample ex = MakeSetsExample();
  SolutionTable sol = Solve(ex.problem);
  // Sol: (d1,d1) = {a}, (d1,d2) = (d2,d1) = {}, (d2,d2) = {}.
  ASSERT_EQ(sol.values.size(), 4u);
  EXPECT_EQ(sol.values[0], Value::Set(1));
  EXPECT_EQ(sol.values[1], Value::Set(0));
  EXPECT_EQ(sol.values[3], Value::Set(0));
  EXPECT_EQ(sol.OptimalTuples(), std::vector<Assignment>{(Assignment{0, 0})});
}

TEST(Solve, AgreesWithEnumerationOnRandomProblems) {
  const std::vector<SemiringPtr> semirings{
      MakeBoolean(), MakeFuzzy(), MakeProbabilistic(), MakeWeighted(),
      MakePowerset({"a", "b", "c"}),
      MakeProduct({MakeFuzzy(), MakeBoolean()})};
  RandomProblemOptions opts;
  opts.max_vars = 5;
  for (std::size_t si = 0; si < semirings.size(); ++si) {
    for (std::uint64_t i = 0; i < 60; ++i) {
      Rng rng = TrialRng(si, i);
      Problem p = RandomProblem(semirings[si], rng, opts);
      SolutionTable sol = Solve(p);
      auto expected = oracle::Solve(p);
      ASSERT_EQ(sol.values.size(), expected.size());
      for (std::size_t k = 0; k < sol.values.size(); ++k) {
        ASSERT_EQ(sol.values[k], expected.at(sol.TupleAt(k)))
            << semirings[si]->Name() << " trial " << i;
      }
      auto opt = oracle::Optima(p);
      auto got = sol.OptimalTuples();
      EXPECT_EQ(std::set<Assignment>(got.begin(), got.end()), opt);
      EXPECT_EQ(Optimals(p), got);
    }
  }
}

TEST(Solve, ThreadCountDoesNotChangeTheAnswer) {
  RandomProblemOptions opts;
  opts.min_vars = 6;
  opts.max_vars = 7;
  opts.min_domain = 3;
  opts.max_domain = 3;
  opts.max_constraints = 6;
  for (std::uint64_t i = 0; i < 10; ++i) {
    Rng rng = TrialRng(99, i);
    Problem p = RandomProblem(MakeFuzzy(), rng, opts);
    SolutionTable one = Solve(p, 1);
    SolutionTable many = Solve(p, 8);
    EXPECT_EQ(one.values, many.values);
    EXPECT_EQ(one.optimal, many.optimal);
  }
}

TEST(Order, ProblemBelow) {
  auto sys = WeightedSystem(2);
  Problem lo = MakeProblem(sys, {Constraint({0}, {W(4), W(5)}, 2)}, {0});
  Problem hi = MakeProblem(sys, {Constraint({0}, {W(1), W(5)}, 2)}, {0});
  EXPECT_TRUE(ProblemBelow(lo, hi));
  EXPECT_FALSE(ProblemBelow(hi, lo));
  EXPECT_TRUE(ProblemBelow(lo, lo));
  EXPECT_TRUE(ProblemEqual(lo, lo));
  EXPECT_FALSE(ProblemEqual(lo, hi));
  // Dropping a constraint moves a problem up.
  Problem two = MakeProblem(sys,
                            {Constraint({0}, {W(4), W(5)}, 2),
                             Constraint({1}, {W(2), W(0)}, 2)},
                            {0});
  EXPECT_TRUE(ProblemBelow(two, lo));
  EXPECT_FALSE(ProblemBelow(lo, two));
}

TEST(Order, RaisedProblemsSitAbove) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = TrialRng(7, i);
    Problem p = RandomProblem(MakePowerset({"a", "b"}), rng);
    Problem q = RaiseProblem(p, rng);
    EXPECT_TRUE(ProblemBelow(p, q));
    for (std::size_t k = 0; k < p.constraints.size(); ++k) {
      EXPECT_TRUE(ConstraintBelow(p.semiring(), p.constraints[k], q.constraints[k]));
    }
  }
}

TEST(Problems, MalformedInputIsRejected) {
  auto sys = WeightedSystem(2);
  EXPECT_THROW(Constraint({1, 0}, {W(0), W(0), W(0), W(0)}, 2), InputError);
  EXPECT_THROW(Constraint({0}, {W(0)}, 2), InputError);
  EXPECT_THROW(MakeProblem(sys, {Constraint({0, 2}, {W(0), W(0), W(0), W(0)}, 2)}, {}),
               InputError);
  EXPECT_THROW(MakeProblem(sys,
                           {Constraint({0}, {W(0), W(1)}, 2),
                            Constraint({0}, {W(2), W(1)}, 2)},
                           {}),
               InputError);
  EXPECT_THROW(MakeProblem(sys, {Constraint({0}, {W(0), Value::Bool(true)}, 2)}, {}),
               InputError);
  EXPECT_THROW(MakeProblem(sys, {}, {1, 0}), InputError);
  try {
    MakeProblem(sys, {Constraint({0}, {W(0), W(1)}, 2), Constraint({0}, {W(0), W(1)}, 2)},
                {});
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.location(), "/constraints/1");
  }
  EXPECT_THROW(ConstraintSystem(MakeBoolean(), {}, {"x"}), InputError);
  EXPECT_THROW(ConstraintSystem(MakeBoolean(), {"d", "d"}, {"x"}), InputError);
  EXPECT_THROW(ConstraintSystem(MakeBoolean(), {"d"}, {"x", "x"}), InputError);
  EXPECT_THROW(sys->Var("nope"), InputError);
  EXPECT_EQ(sys->MakeScope({"x2", "x1"}), (Scope{0, 1}));
  EXPECT_THROW(sys->MakeScope({"x2", "x1", "x2"}), InputError);
}

}  // namespace
}  // namespace softabs
