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

#include "softabs/axioms.h"

#include <gtest/gtest.h>

#include "mutations.h"

namespace softabs {
namespace {

TEST(Axioms, UnmutatedTablesPass) {
  for (const auto& t : {mutation::BooleanTables(), mutation::PowersetTables()}) {
    EXPECT_TRUE(mutation::AllViolated(t).empty());
    PropertyReport r = CheckAxioms(*mutation::Build(t));
    EXPECT_EQ(r.verdict, Verdict::kPass);
    EXPECT_TRUE(r.exhaustive);
  }
}

TEST(Axioms, EverySingleCellMutationIsCaughtWithAWitness) {
  for (const auto& m : mutation::Mutations()) {
    SCOPED_TRACE(m.label);
    const auto violated = mutation::AllViolated(m.tables);
    ASSERT_FALSE(violated.empty());
    PropertyReport r = CheckAxioms(*mutation::Build(m.tables));
    ASSERT_EQ(r.verdict, Verdict::kFail);
    EXPECT_TRUE(violated.count(r.reason)) << r.reason;
    int w[3] = {0, 0, 0};
    for (std::size_t i = 0; i < r.witness.size() && i < 3; ++i) {
      w[i] = static_cast<int>(r.witness[i].value.as_index());
    }
    EXPECT_TRUE(mutation::Violated(m.tables, r.reason, w[0], w[1], w[2]));
  }
}

TEST(Axioms, IdempotencyWitnessNamesTheMutatedElement) {
  auto t = mutation::PowersetTables();
  t.sum[1][1] = 2;  // {a} + {a} = {b}
  PropertyReport r = CheckAxioms(*mutation::Build(t));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.reason, "idempotency");
  ASSERT_NE(r.Find("a"), nullptr);
  EXPECT_EQ(r.Find("a")->as_index(), 1u);
}

}  // namespace
}  // namespace softabs
