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

#include <algorithm>
#include <exception>
#include <thread>

#include "softabs/errors.h"
#include "softabs/scsp.h"

namespace softabs {

namespace {

// Element indices through the dense tables.
struct IndexAlgebra {
  using T = std::uint32_t;
  const FiniteTables& tab;
  T zero() const { return tab.zero; }
  T one() const { return tab.one; }
  T Sum(T a, T b) const { return tab.Sum(a, b); }
  T Prod(T a, T b) const { return tab.Prod(a, b); }
};

struct ValueAlgebra {
  using T = Value;
  const Semiring& s;
  const T& zero() const { return s.zero(); }
  const T& one() const { return s.one(); }
  T Sum(const T& a, const T& b) const { return s.Sum(a, b); }
  T Prod(const T& a, const T& b) const { return s.Prod(a, b); }
};

// Layout of the enumeration: every variable in con or some scope gets a
// position; each constraint is evaluated once all of its variables are
// fixed, on top of the running product of the earlier positions.
struct Plan {
  std::size_t d = 0;
  Scope vars;                                   // CON, sorted
  std::vector<std::vector<std::size_t>> where;  // per constraint: positions
  std::vector<std::vector<std::size_t>> at;     // per position: constraints
  std::vector<std::size_t> nullary;             // constraints with no scope
  std::vector<std::size_t> con_pos;
  std::size_t total = 1;
  std::size_t fibers = 1;
};

Plan MakePlan(const Problem& p) {
  Plan plan;
  plan.d = p.system->domain_size();
  std::vector<VarId> all(p.con.begin(), p.con.end());
  for (const auto& c : p.constraints) {
    all.insert(all.end(), c.scope().begin(), c.scope().end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  plan.vars = all;
  auto pos = [&](VarId v) {
    return static_cast<std::size_t>(
        std::lower_bound(all.begin(), all.end(), v) - all.begin());
  };
  plan.at.resize(all.size());
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    std::vector<std::size_t> w;
    for (VarId v : p.constraints[i].scope()) w.push_back(pos(v));
    if (w.empty()) {
      plan.nullary.push_back(i);
    } else {
      plan.at[w.back()].push_back(i);
    }
    plan.where.push_back(std::move(w));
  }
  for (VarId v : p.con) plan.con_pos.push_back(pos(v));
  plan.total = TupleCount(plan.d, all.size());
  plan.fibers = TupleCount(plan.d, p.con.size());
  return plan;
}

template <class A>
void Enumerate(const A& alg, const Plan& plan,
               const std::vector<std::vector<typename A::T>>& tables,
               std::size_t begin, std::size_t end,
               std::vector<typename A::T>& acc) {
  using T = typename A::T;
  const std::size_t k = plan.vars.size();
  const std::size_t d = plan.d;
  acc.assign(plan.fibers, alg.zero());

  // The trivial constraint over con contributes the leading factor one.
  T base = alg.one();
  for (std::size_t i : plan.nullary) base = alg.Prod(base, tables[i][0]);

  Assignment t = TupleAt(begin, d, k);
  std::vector<T> partial(k, base);
  std::size_t changed = 0;
  for (std::size_t n = begin; n < end; ++n) {
    for (std::size_t p = changed; p < k; ++p) {
      T v = p == 0 ? base : partial[p - 1];
      for (std::size_t i : plan.at[p]) {
        std::size_t off = 0;
        for (std::size_t q : plan.where[i]) off = off * d + t[q];
        v = alg.Prod(v, tables[i][off]);
      }
      partial[p] = std::move(v);
    }
    std::size_t fiber = 0;
    for (std::size_t q : plan.con_pos) fiber = fiber * d + t[q];
    const T& value = k == 0 ? base : partial[k - 1];
    acc[fiber] = alg.Sum(acc[fiber], value);

    std::size_t p = k;
    while (p > 0) {
      --p;
      if (++t[p] < d) break;
      t[p] = 0;
    }
    changed = p;
  }
}

template <class A>
std::vector<typename A::T> SolveWith(
    const A& alg, const Plan& plan,
    const std::vector<std::vector<typename A::T>>& tables, unsigned jobs) {
  using T = typename A::T;
  std::size_t chunks = std::max<std::size_t>(1, jobs);
  chunks = std::min(chunks, plan.total);
  if (chunks <= 1) {
    std::vector<T> acc;
    Enumerate(alg, plan, tables, 0, plan.total, acc);
    return acc;
  }
  std::vector<std::vector<T>> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> workers;
  for (std::size_t c = 0; c < chunks; ++c) {
    std::size_t begin = plan.total * c / chunks;
    std::size_t end = plan.total * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      try {
        Enumerate(alg, plan, tables, begin, end, parts[c]);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> acc = std::move(parts[0]);
  for (std::size_t c = 1; c < chunks; ++c) {
    for (std::size_t f = 0; f < acc.size(); ++f) {
      acc[f] = alg.Sum(acc[f], parts[c][f]);
    }
  }
  return acc;
}

}  // namespace

SolutionTable Solve(const Problem& p, unsigned jobs) {
  const Semiring& s = p.semiring();
  Plan plan = MakePlan(p);
  SolutionTable out;
  out.con = p.con;
  out.domain_size = plan.d;

  if (const FiniteTables* tab = s.tables()) {
    std::vector<std::vector<std::uint32_t>> tables;
    for (const auto& c : p.constraints) {
      std::vector<std::uint32_t> row;
      row.reserve(c.size());
      for (const Value& v : c.table()) {
        row.push_back(static_cast<std::uint32_t>(s.IndexOf(v)));
      }
      tables.push_back(std::move(row));
    }
    auto acc = SolveWith(IndexAlgebra{*tab}, plan, tables, jobs);
    out.values.reserve(acc.size());
    for (std::uint32_t i : acc) out.values.push_back(s.ElementAt(i));
  } else {
    std::vector<std::vector<Value>> tables;
    for (const auto& c : p.constraints) tables.push_back(c.table());
    out.values = SolveWith(ValueAlgebra{s}, plan, tables, jobs);
  }
  out.optimal = MaximalPositions(s, out.values);
  return out;
}

}  // namespace softabs
