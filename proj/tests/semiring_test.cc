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

#include "softabs/semiring.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "softabs/axioms.h"
#include "softabs/errors.h"

namespace softabs {
namespace {

Value U(std::int64_t n, std::int64_t d) { return Value::Unit(Rational(n, d)); }
Value W(std::int64_t n) { return Value::Weighted(Weight::Of(Rational(n))); }

TEST(Semiring, BuiltinSums) {
  EXPECT_EQ(MakeFuzzy()->Sum(U(3, 10), U(7, 10)), U(7, 10));
  auto p = MakePowerset({"a", "b", "c"});
  EXPECT_EQ(p->Sum(Value::Set(2), Value::Set(4)), Value::Set(6));
  EXPECT_EQ(MakeWeighted()->Sum(W(5), W(3)), W(3));
}

TEST(Semiring, BuiltinProducts) {
  auto p = MakePowerset({"a", "b", "c"});
  EXPECT_EQ(p->Prod(Value::Set(2), Value::Set(4)), Value::Set(0));
  EXPECT_EQ(MakeProbabilistic()->Prod(U(7, 10), U(7, 10)), U(49, 100));
  EXPECT_EQ(MakeWeighted()->Prod(W(2), W(3)), W(5));
  for (const auto& s : {MakeBoolean(), MakeFuzzy(), MakeWeighted(), p}) {
    Rng rng(1);
    for (int i = 0; i < 20; ++i) {
      Value x = s->Sample(rng);
      EXPECT_EQ(s->Prod(s->one(), x), x) << s->Name();
    }
  }
}

TEST(Semiring, InducedOrder) {
  auto p = MakePowerset({"a", "b", "c"});
  EXPECT_FALSE(p->Leq(Value::Set(1), Value::Set(2)));
  EXPECT_FALSE(p->Leq(Value::Set(2), Value::Set(1)));
  // min(5,3) = 3, so 5 is below 3 in the weighted order.
  EXPECT_TRUE(MakeWeighted()->Leq(W(5), W(3)));
  EXPECT_FALSE(MakeWeighted()->Leq(W(3), W(5)));
  EXPECT_TRUE(MakeWeighted()->Leq(MakeWeighted()->zero(), W(100)));
  for (const auto& s : {MakeBoolean(), MakeFuzzy(), MakeWeighted(), p}) {
    Rng rng(2);
    for (int i = 0; i < 20; ++i) {
      Value x = s->Sample(rng), y = s->Sample(rng);
      EXPECT_TRUE(s->Leq(s->zero(), x));
      EXPECT_TRUE(s->Leq(x, s->one()));
      EXPECT_EQ(s->Leq(x, y), oracle::Leq(*s, x, y));
    }
  }
}

TEST(Semiring, Maximal) {
  auto p = MakePowerset({"a", "b", "c"});
  std::vector<Value> v1{Value::Set(1), Value::Set(0), Value::Set(0)};
  EXPECT_EQ(Maximal(*p, v1), std::vector<Value>{Value::Set(1)});
  auto q = MakePowerset({"p", "q"});
  std::vector<Value> v2{Value::Set(1), Value::Set(2), Value::Set(0)};
  EXPECT_EQ(Maximal(*q, v2), (std::vector<Value>{Value::Set(1), Value::Set(2)}));
  std::vector<Value> v3{U(1, 5), U(9, 10), U(9, 10)};
  EXPECT_EQ(Maximal(*MakeFuzzy(), v3), std::vector<Value>{U(9, 10)});
  EXPECT_EQ(MaximalPositions(*MakeFuzzy(), v3), (std::vector<std::size_t>{1, 2}));
  EXPECT_THROW(Maximal(*MakeFuzzy(), std::vector<Value>{}), PreconditionError);
}

TEST(Semiring, MakeBuiltin) {
  auto q = MakeBuiltin({{"kind", "powerset"}, {"universe", {"p", "q"}}});
  EXPECT_EQ(q->size(), 4u);
  EXPECT_EQ(q->zero(), Value::Set(0));
  EXPECT_EQ(q->one(), Value::Set(3));
  auto bb = MakeBuiltin({{"kind", "product"}, {"factors", {"boolean", "boolean"}}});
  EXPECT_EQ(bb->size(), 4u);
  Value tf = Value::Components({Value::Bool(true), Value::Bool(false)});
  Value ft = Value::Components({Value::Bool(false), Value::Bool(true)});
  EXPECT_EQ(bb->Sum(tf, ft), bb->one());
  EXPECT_EQ(bb->Prod(tf, ft), bb->zero());
  EXPECT_FALSE(bb->Leq(tf, ft));
  EXPECT_FALSE(bb->is_total());
  EXPECT_THROW(MakeBuiltin("nope"), InputError);
  EXPECT_THROW(MakeBuiltin({{"kind", "powerset"}, {"universe", {"p", "p"}}}),
               InputError);
}

TEST(Semiring, NonDistributiveTableIsRejectedByAxioms) {
  // The diamond M3 with meet as product is a lattice but not distributive.
  std::vector<std::string> e{"0", "a", "b", "c", "1"};
  auto join = [](int x, int y) {
    if (x == y) return x;
    if (x == 0) return y;
    if (y == 0) return x;
    return 4;
  };
  auto meet = [](int x, int y) {
    if (x == y) return x;
    if (x == 4) return y;
    if (y == 4) return x;
    return 0;
  };
  std::vector<std::vector<std::string>> sum(5, std::vector<std::string>(5));
  std::vector<std::vector<std::string>> prod = sum;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      sum[i][j] = e[join(i, j)];
      prod[i][j] = e[meet(i, j)];
    }
  }
  auto m3 = MakeTable(e, sum, prod, "0", "1");
  PropertyReport r = CheckAxioms(*m3);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.reason, "distributivity");
  const Value* a = r.Find("a");
  const Value* b = r.Find("b");
  const Value* c = r.Find("c");
  ASSERT_TRUE(a && b && c);
  EXPECT_NE(m3->Prod(*a, m3->Sum(*b, *c)),
            m3->Sum(m3->Prod(*a, *b), m3->Prod(*a, *c)));
}

TEST(Semiring, AxiomsHoldForBuiltins) {
  for (const auto& s : {MakeBoolean(), MakeFuzzy(), MakeProbabilistic(),
                        MakeWeighted(), MakePowerset({"a", "b"}),
                        MakeProduct({MakeBoolean(), MakeFuzzy()})}) {
    PropertyReport r = CheckAxioms(*s);
    EXPECT_TRUE(r.ok()) << s->Name() << ": " << r.reason;
  }
  PropertyReport r = CheckAxioms(*MakePowerset({"a", "b"}));
  EXPECT_EQ(r.verdict, Verdict::kPass);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(CheckAxioms(*MakeFuzzy()).verdict, Verdict::kSampledPass);
}

TEST(Semiring, JsonRoundTrip) {
  for (const auto& s : {MakeBoolean(), MakeFuzzy(), MakeWeighted(),
                        MakePowerset({"x", "y"}),
                        MakeProduct({MakeBoolean(), MakeWeighted()})}) {
    auto again = MakeBuiltin(s->Descriptor());
    EXPECT_TRUE(again->SameAs(*s));
    Rng rng(3);
    for (int i = 0; i < 10; ++i) {
      Value v = s->Sample(rng);
      EXPECT_EQ(s->FromJson(s->ToJson(v)), v);
    }
  }
  EXPECT_EQ(MakeWeighted()->FromJson("inf"), MakeWeighted()->zero());
  EXPECT_THROW(MakeFuzzy()->FromJson("3/2"), InputError);
  EXPECT_THROW(MakePowerset({"a"})->FromJson({"z"}), InputError);
}

}  // namespace
}  // namespace softabs
