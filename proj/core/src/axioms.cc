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

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace softabs {

namespace {

bool FitsBudget(std::size_t size, std::size_t arity, std::uint64_t budget) {
  double total = std::pow(static_cast<double>(size), static_cast<double>(arity));
  return total <= static_cast<double>(budget);
}

}  // namespace

CarrierPool MakePool(const Semiring& s, const Budget& budget,
                     std::size_t arity, std::size_t sample_count) {
  CarrierPool pool;
  if (s.is_finite() && s.size() <= kMaxTabulatedCarrier &&
      FitsBudget(s.size(), arity, budget.max_evaluations)) {
    pool.values = s.Elements();
    pool.exhaustive = true;
    return pool;
  }
  pool.exhaustive = false;
  Rng rng(budget.seed);
  pool.values.push_back(s.zero());
  if (s.one() != s.zero()) pool.values.push_back(s.one());
  // Duplicates are harmless for checking but waste budget.
  std::size_t attempts = 0;
  while (pool.values.size() < std::max<std::size_t>(sample_count, 2) &&
         attempts < sample_count * 8) {
    ++attempts;
    Value v = s.Sample(rng);
    if (std::find(pool.values.begin(), pool.values.end(), v) ==
        pool.values.end()) {
      pool.values.push_back(std::move(v));
    }
  }
  return pool;
}

namespace {

// Runs the axiom battery, stopping at the first violation.
class AxiomChecker {
 public:
  AxiomChecker(const Semiring& s, const std::vector<Value>& pool,
               PropertyReport& report)
      : s_(s), pool_(pool), report_(report) {}

  // Each predicate returns true when the axiom holds for the given values.
  bool Unary(const char* name, const std::function<bool(const Value&)>& ok) {
    for (const Value& a : pool_) {
      ++report_.evaluated;
      if (!ok(a)) return Fail(name, {&a});
    }
    return true;
  }
  bool Binary(const char* name,
              const std::function<bool(const Value&, const Value&)>& ok) {
    for (const Value& a : pool_) {
      for (const Value& b : pool_) {
        ++report_.evaluated;
        if (!ok(a, b)) return Fail(name, {&a, &b});
      }
    }
    return true;
  }
  bool Ternary(const char* name,
               const std::function<bool(const Value&, const Value&,
                                        const Value&)>& ok) {
    for (const Value& a : pool_) {
      for (const Value& b : pool_) {
        for (const Value& c : pool_) {
          ++report_.evaluated;
          if (!ok(a, b, c)) return Fail(name, {&a, &b, &c});
        }
      }
    }
    return true;
  }

 private:
  bool Fail(const char* name, std::initializer_list<const Value*> values) {
    static const char* kLabels[] = {"a", "b", "c"};
    report_.verdict = Verdict::kFail;
    report_.reason = name;
    std::size_t i = 0;
    for (const Value* v : values) {
      report_.witness.push_back({kLabels[i++], Side::kSource, *v});
    }
    return false;
  }

  const Semiring& s_;
  const std::vector<Value>& pool_;
  PropertyReport& report_;
};

}  // namespace

PropertyReport CheckAxioms(const Semiring& s, const Budget& budget) {
  PropertyReport report;
  report.property = "c-semiring axioms";
  // Ternary laws dominate; keep the sampled cube inside a sixteenth of the
  // evaluation budget.
  const auto cube = static_cast<std::size_t>(
      std::cbrt(static_cast<double>(budget.max_evaluations) / 16));
  CarrierPool pool = MakePool(s, budget, 3,
                              std::max<std::size_t>(2, std::min(budget.samples, cube)));
  report.exhaustive = pool.exhaustive;
  AxiomChecker check(s, pool.values, report);

  const Value& zero = s.zero();
  const Value& one = s.one();
  auto sum = [&](const Value& a, const Value& b) { return s.Sum(a, b); };
  auto prod = [&](const Value& a, const Value& b) { return s.Prod(a, b); };
  // The order is recomputed from the sum here rather than read from the
  // cached matrix, so a broken table cannot vouch for itself.
  auto leq = [&](const Value& a, const Value& b) { return sum(a, b) == b; };

  // Unary laws first: they pin the failure on a single element.
  bool ok =
      check.Unary("sum unit", [&](auto& a) { return sum(zero, a) == a; }) &&
      check.Unary("idempotency", [&](auto& a) { return sum(a, a) == a; }) &&
      check.Unary("sum absorption",
                  [&](auto& a) { return sum(a, one) == one; }) &&
      check.Unary("product unit", [&](auto& a) { return prod(one, a) == a; }) &&
      check.Unary("product absorption",
                  [&](auto& a) { return prod(zero, a) == zero; }) &&
      check.Binary("sum commutativity",
                   [&](auto& a, auto& b) { return sum(a, b) == sum(b, a); }) &&
      check.Binary("product commutativity",
                   [&](auto& a, auto& b) { return prod(a, b) == prod(b, a); }) &&
      check.Ternary("sum associativity",
                    [&](auto& a, auto& b, auto& c) {
                      return sum(sum(a, b), c) == sum(a, sum(b, c));
                    }) &&
      check.Ternary("product associativity",
                    [&](auto& a, auto& b, auto& c) {
                      return prod(prod(a, b), c) == prod(a, prod(b, c));
                    }) &&
      check.Ternary("distributivity",
                    [&](auto& a, auto& b, auto& c) {
                      return prod(a, sum(b, c)) ==
                             sum(prod(a, b), prod(a, c));
                    }) &&
      check.Unary("reflexivity", [&](auto& a) { return leq(a, a); }) &&
      check.Binary("antisymmetry",
                   [&](auto& a, auto& b) {
                     return !(leq(a, b) && leq(b, a)) || a == b;
                   }) &&
      check.Ternary("transitivity",
                    [&](auto& a, auto& b, auto& c) {
                      return !(leq(a, b) && leq(b, c)) || leq(a, c);
                    }) &&
      check.Unary("bottom", [&](auto& a) { return leq(zero, a); }) &&
      check.Unary("top", [&](auto& a) { return leq(a, one); }) &&
      check.Ternary("least upper bound",
                    [&](auto& a, auto& b, auto& c) {
                      Value j = sum(a, b);
                      if (!leq(a, j) || !leq(b, j)) return false;
                      return !(leq(a, c) && leq(b, c)) || leq(j, c);
                    }) &&
      check.Ternary("monotonicity", [&](auto& a, auto& b, auto& c) {
        return !leq(a, b) || leq(prod(a, c), prod(b, c));
      });

  if (ok) {
    bool idempotent_prod = std::all_of(
        pool.values.begin(), pool.values.end(),
        [&](const Value& a) { return prod(a, a) == a; });
    if (idempotent_prod) {
      check.Ternary("greatest lower bound", [&](auto& a, auto& b, auto& c) {
        Value m = prod(a, b);
        if (!leq(m, a) || !leq(m, b)) return false;
        return !(leq(c, a) && leq(c, b)) || leq(c, m);
      });
    }
  }
  if (report.verdict != Verdict::kFail && !pool.exhaustive) {
    report.verdict = Verdict::kSampledPass;
  }
  return report;
}

}  // namespace softabs
