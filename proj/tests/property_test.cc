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

#include "softabs/property.h"

#include <gtest/gtest.h>

#include "oracles.h"
#include "softabs/catalog.h"
#include "softabs/errors.h"
#include "softabs/witness.h"

namespace softabs {
namespace {

Value S(std::uint64_t bits) { return Value::Set(bits); }
Value U(std::int64_t n, std::int64_t d) { return Value::Unit(Rational(n, d)); }
const Value kF = Value::Bool(false);
const Value kT = Value::Bool(true);

// powerset{a,b,c}: a=1, b=2, c=4. powerset{p,q}: p=1, q=2.
TEST(Mapping, Apply) {
  SetsExample ex = MakeSetsExample();
  EXPECT_EQ(ex.alpha->Apply(S(6)), S(2));
  EXPECT_EQ(ex.alpha->Apply(S(1)), S(1));
  EXPECT_EQ(ex.alpha->Apply(S(5)), S(3));
  auto fuzzy = MakeFuzzy();
  Rng rng(5);
  auto id = MakeIdentity(fuzzy);
  for (int i = 0; i < 10; ++i) {
    Value x = fuzzy->Sample(rng);
    EXPECT_EQ(id->Apply(x), x);
  }
  auto th = MakeThreshold(fuzzy, MakeBoolean(), U(1, 2), kF, kT);
  EXPECT_EQ(th->Apply(U(7, 10)), kT);
  EXPECT_EQ(th->Apply(U(1, 2)), kT);
  EXPECT_EQ(th->Apply(U(49, 100)), kF);
  EXPECT_THROW(MakeThreshold(MakePowerset({"a", "b"}), MakeBoolean(), S(1), kF, kT),
               PreconditionError);
}

TEST(Property, TwoSetsMapIsQuasiButNotAHomomorphism) {
  SetsExample ex = MakeSetsExample();
  EXPECT_EQ(CheckProperty(*ex.alpha, PropertyKind::kQuasiHomomorphism).verdict,
            Verdict::kPass);
  PropertyReport hom = CheckProperty(*ex.alpha, PropertyKind::kHomomorphism);
  ASSERT_EQ(hom.verdict, Verdict::kFail);
  EXPECT_EQ(hom.reason, "product");
  EXPECT_EQ(*hom.Find("a"), S(2));
  EXPECT_EQ(*hom.Find("b"), S(4));
  EXPECT_TRUE(ConfirmViolation(*ex.alpha, hom));
  EXPECT_TRUE(oracle::Quasi(*ex.alpha));
  EXPECT_FALSE(oracle::Homomorphism(*ex.alpha));
}

TEST(Property, ThresholdsFromTheUnitInterval) {
  auto th = MakeThreshold(MakeFuzzy(), MakeBoolean(), U(1, 2), kF, kT);
  PropertyReport r = CheckProperty(*th, PropertyKind::kHomomorphism);
  EXPECT_EQ(r.verdict, Verdict::kSampledPass);

  auto pth = MakeThreshold(MakeProbabilistic(), MakeBoolean(), U(1, 2), kF, kT);
  PropertyReport p = CheckProperty(*pth, PropertyKind::kHomomorphism);
  ASSERT_EQ(p.verdict, Verdict::kFail);
  EXPECT_EQ(p.reason, "product");
  EXPECT_TRUE(ConfirmViolation(*pth, p));
  // The hand-checked pair: 0.7 x 0.7 = 0.49 falls under the threshold.
  PropertyReport hand;
  hand.verdict = Verdict::kFail;
  hand.reason = "product";
  hand.witness = {{"a", Side::kSource, U(7, 10)}, {"b", Side::kSource, U(7, 10)}};
  EXPECT_TRUE(ConfirmViolation(*pth, hand));
}

TEST(Property, EndpointFailuresAreReported) {
  auto b = MakeBoolean();
  auto flip = MakeTableMapping(b, b, std::vector<Value>{kT, kF});
  EXPECT_FALSE(flip->PreservesEndpoints());
  PropertyReport r = CheckProperty(*flip, PropertyKind::kHomomorphism);
  EXPECT_EQ(r.reason, "zero");
  EXPECT_TRUE(ConfirmViolation(*flip, r));
}

TEST(Property, UpperAdjointOfTheTwoSetsMap) {
  SetsExample ex = MakeSetsExample();
  AdjointSearch adj = FindUpperAdjoint(ex.alpha);
  ASSERT_TRUE(adj.pair.has_value());
  const Mapping& g = *adj.pair->upper;
  EXPECT_EQ(g.Apply(S(0)), S(0));
  EXPECT_EQ(g.Apply(S(1)), S(1));
  EXPECT_EQ(g.Apply(S(2)), S(6));
  EXPECT_EQ(g.Apply(S(3)), S(7));
  EXPECT_TRUE(adj.pair->insertion);
  EXPECT_EQ(CheckProperty(*ex.alpha, PropertyKind::kAbstraction, &g).verdict,
            Verdict::kPass);

  PropertyReport op = CheckProperty(*ex.alpha, PropertyKind::kOrderPreserving, &g);
  ASSERT_EQ(op.verdict, Verdict::kFail);
  EXPECT_TRUE(ConfirmViolation(*ex.alpha, op, &g));
  // The documented witness: {q} below {p,q} but {b} not below {a,c}.
  PropertyReport doc;
  doc.verdict = Verdict::kFail;
  doc.reason = "order preservation";
  doc.witness = {{"I1[0]", Side::kSource, S(2)}, {"I2[0]", Side::kSource, S(5)}};
  EXPECT_TRUE(ConfirmViolation(*ex.alpha, doc, &g));
}

TEST(Property, AdjointEdgeCases) {
  auto s = MakePowerset({"a", "b"});
  AdjointSearch id = FindUpperAdjoint(MakeIdentity(s));
  ASSERT_TRUE(id.pair.has_value());
  for (const Value& v : s->Elements()) EXPECT_EQ(id.pair->upper->Apply(v), v);
  auto swap = MakeTableMapping(s, s, std::vector<Value>{S(0), S(2), S(1), S(0)});
  EXPECT_THROW(FindUpperAdjoint(swap), PreconditionError);
}

TEST(Property, SumOfProductsReducesToOrderReflection) {
  for (const auto& m : EndpointMaps(Catalog()[5].semiring, Catalog()[6].semiring)) {
    EXPECT_EQ(CheckSumOfProducts(*m, 1, 1).ok(),
              CheckProperty(*m, PropertyKind::kOrderReflecting).ok());
  }
  SetsExample ex = MakeSetsExample();
  PropertyReport r = CheckSumOfProducts(*ex.alpha, 2, 1);
  ASSERT_EQ(r.verdict, Verdict::kFail);
  EXPECT_EQ(r.Collect("U[").size(), 2u);
  EXPECT_EQ(r.Collect("V[").size(), 2u);
  EXPECT_TRUE(ConfirmViolation(*ex.alpha, r));
}

TEST(Property, OrderReflectingHomomorphismsPassEverySmallShape) {
  const auto& homs = CatalogHomomorphisms(4);
  std::size_t checked = 0;
  for (const auto& h : homs) {
    if (!oracle::OrderReflecting(*h.map)) continue;
    for (std::size_t m = 1; m <= 2; ++m) {
      for (std::size_t n = 1; n <= 2; ++n) {
        EXPECT_TRUE(CheckSumOfProducts(*h.map, m, n).ok()) << h.map->Name();
      }
    }
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(Property, IsomorphismScan) {
  auto b = MakeBoolean();
  EXPECT_EQ(IsomorphismScan(b, b).size(), 1u);
  EXPECT_EQ(IsomorphismScan(MakePowerset({"a"}), b).size(), 1u);
  EXPECT_TRUE(IsomorphismScan(MakePowerset({"a", "b"}), b).empty());
}

// Every endpoint map between small catalog entries: verdicts agree with the
// brute-force definitions and every failure reproduces.
TEST(Property, VerdictsMatchBruteForceOnTheCatalog) {
  Budget budget;
  budget.set_size = 3;
  for (const auto& s : CatalogUpTo(4)) {
    for (const auto& t : CatalogUpTo(4)) {
      for (const auto& m : EndpointMaps(s.semiring, t.semiring)) {
        SCOPED_TRACE(m->Name());
        auto check = [&](PropertyKind k, bool expected) {
          PropertyReport r = CheckProperty(*m, k, nullptr, budget);
          EXPECT_EQ(r.verdict, expected ? Verdict::kPass : Verdict::kFail)
              << PropertyName(k);
          if (!r.ok()) EXPECT_TRUE(ConfirmViolation(*m, r)) << PropertyName(k);
        };
        check(PropertyKind::kMonotonic, oracle::Monotone(*m));
        check(PropertyKind::kHomomorphism, oracle::Homomorphism(*m));
        check(PropertyKind::kQuasiHomomorphism, oracle::Quasi(*m));
        check(PropertyKind::kOrderReflecting, oracle::OrderReflecting(*m));
        check(PropertyKind::kIsomorphism, oracle::Isomorphism(*m));
        if (s.semiring->is_total() && t.semiring->is_total()) {
          check(PropertyKind::kAggregationCompatible,
                oracle::AggregationCompatible(*m, 3));
        }
        if (!oracle::Monotone(*m)) continue;
        AdjointSearch adj = FindUpperAdjoint(m);
        // Brute-force adjoint: gamma(y) is the largest x with alpha(x) <= y.
        const Semiring& src = *s.semiring;
        const Semiring& tgt = *t.semiring;
        for (const Value& y : tgt.Elements()) {
          std::vector<Value> below;
          for (const Value& x : src.Elements()) {
            if (oracle::Leq(tgt, m->Apply(x), y)) below.push_back(x);
          }
          std::optional<Value> top;
          for (const Value& x : below) {
            bool greatest = true;
            for (const Value& w : below) greatest = greatest && oracle::Leq(src, w, x);
            if (greatest) top = x;
          }
          if (adj.pair) {
            ASSERT_TRUE(top.has_value());
            EXPECT_EQ(adj.pair->upper->Apply(y), *top);
          }
        }
        if (!adj.pair || !adj.pair->insertion) continue;
        PropertyReport op = CheckProperty(*m, PropertyKind::kOrderPreserving,
                                          adj.pair->upper.get(), budget);
        EXPECT_EQ(op.ok(), oracle::OrderPreserving(*m, 3));
      }
    }
  }
}

TEST(Property, NamesRoundTrip) {
  for (auto k : {PropertyKind::kMonotonic, PropertyKind::kHomomorphism,
                 PropertyKind::kQuasiHomomorphism, PropertyKind::kOrderReflecting,
                 PropertyKind::kIsomorphism, PropertyKind::kGaloisInsertion,
                 PropertyKind::kOrderPreserving, PropertyKind::kAbstraction,
                 PropertyKind::kAggregationCompatible}) {
    EXPECT_EQ(ParsePropertyKind(PropertyName(k)), k);
  }
  EXPECT_FALSE(ParsePropertyKind("nope").has_value());
}

}  // namespace
}  // namespace softabs
