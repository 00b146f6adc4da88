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

#include "softabs/shrink.h"

#include <algorithm>

#include "softabs/errors.h"
#include "softabs/json_io.h"

namespace softabs {

namespace {

bool Holds(const FailurePredicate& fails, const Problem& p) {
  try {
    return fails(p);
  } catch (const Error&) {
    return false;
  }
}

// Removes variable v everywhere, keeping only constraints that do not
// mention it.
std::optional<Problem> DropVariable(const Problem& p, VarId v) {
  const ConstraintSystem& sys = *p.system;
  if (sys.variables().size() == 1) return std::nullopt;
  for (const Constraint& c : p.constraints) {
    if (std::binary_search(c.scope().begin(), c.scope().end(), v)) {
      return std::nullopt;
    }
  }
  if (std::binary_search(p.con.begin(), p.con.end(), v)) return std::nullopt;
  std::vector<std::string> vars = sys.variables();
  vars.erase(vars.begin() + v);
  auto shift = [v](Scope sc) {
    for (VarId& x : sc) x -= x > v ? 1 : 0;
    return sc;
  };
  auto next = std::make_shared<const ConstraintSystem>(sys.semiring(),
                                                       sys.domain(), vars);
  std::vector<Constraint> cs;
  for (const Constraint& c : p.constraints) {
    cs.emplace_back(shift(c.scope()), c.table(), c.domain_size());
  }
  return MakeProblem(std::move(next), std::move(cs), shift(p.con));
}

std::optional<Problem> DropDomainValue(const Problem& p, std::uint32_t drop) {
  const ConstraintSystem& sys = *p.system;
  const std::size_t d = sys.domain_size();
  if (d == 1) return std::nullopt;
  std::vector<std::string> dom = sys.domain();
  dom.erase(dom.begin() + drop);
  auto next = std::make_shared<const ConstraintSystem>(sys.semiring(), dom,
                                                       sys.variables());
  std::vector<Constraint> cs;
  for (const Constraint& c : p.constraints) {
    const std::size_t k = c.scope().size();
    std::vector<Value> table;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Assignment t = TupleAt(i, d, k);
      if (std::find(t.begin(), t.end(), drop) == t.end()) {
        table.push_back(c.table()[i]);
      }
    }
    cs.emplace_back(c.scope(), std::move(table), d - 1);
  }
  return MakeProblem(std::move(next), std::move(cs), p.con);
}

}  // namespace

Problem Shrink(const Problem& start, const FailurePredicate& fails) {
  Problem p = start;
  const Semiring& s = p.semiring();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = p.constraints.size(); i-- > 0;) {
      Problem q = p;
      q.constraints.erase(q.constraints.begin() + i);
      if (!q.constraints.empty() && Holds(fails, q)) {
        p = std::move(q);
        changed = true;
      }
    }
    for (std::size_t i = p.con.size(); i-- > 0;) {
      Problem q = p;
      q.con.erase(q.con.begin() + i);
      if (Holds(fails, q)) {
        p = std::move(q);
        changed = true;
      }
    }
    for (VarId v = static_cast<VarId>(p.system->variables().size()); v-- > 0;) {
      if (auto q = DropVariable(p, v); q && Holds(fails, *q)) {
        p = std::move(*q);
        changed = true;
      }
    }
    for (std::uint32_t x = static_cast<std::uint32_t>(p.system->domain_size());
         x-- > 0;) {
      if (auto q = DropDomainValue(p, x); q && Holds(fails, *q)) {
        p = std::move(*q);
        changed = true;
      }
    }
    for (std::size_t c = 0; c < p.constraints.size(); ++c) {
      for (std::size_t i = 0; i < p.constraints[c].size(); ++i) {
        for (const Value& flat : {s.zero(), s.one()}) {
          if (p.constraints[c].table()[i] == flat) break;
          std::vector<Value> table = p.constraints[c].table();
          table[i] = flat;
          Problem q = p;
          q.constraints[c] = Constraint(p.constraints[c].scope(),
                                        std::move(table),
                                        p.constraints[c].domain_size());
          if (Holds(fails, q)) {
            p = std::move(q);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return p;
}

nlohmann::json Reproducer(const Problem& p, const Mapping& alpha,
                          const std::string& claim) {
  return {{"claim", claim},
          {"mapping", alpha.Descriptor()},
          {"problem", ProblemToJson(p)}};
}

}  // namespace softabs
