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

#include <functional>

#include "softabs/errors.h"
#include "softabs/property.h"

namespace softabs {

std::string_view GuaranteeName(Guarantee g) {
  switch (g) {
    case Guarantee::kHomomorphism:
      return "homomorphism";
    case Guarantee::kQuasiOnly:
      return "quasi-only";
    case Guarantee::kNone:
      return "none";
  }
  return "?";
}

Problem Translate(const Mapping& alpha, const Problem& p) {
  if (!alpha.source()->SameAs(p.semiring())) {
    throw PreconditionError("mapping source " + alpha.source()->Name() +
                            " does not match problem semiring " +
                            p.semiring().Name());
  }
  auto system = std::make_shared<ConstraintSystem>(
      alpha.target(), p.system->domain(), p.system->variables());
  std::vector<Constraint> cs;
  cs.reserve(p.constraints.size());
  for (const Constraint& c : p.constraints) {
    std::vector<Value> table;
    table.reserve(c.size());
    for (const Value& v : c.table()) table.push_back(alpha.Apply(v));
    cs.emplace_back(c.scope(), std::move(table), c.domain_size());
  }
  return Problem{std::move(system), std::move(cs), p.con};
}

RecoveryResult RecoverOptima(const Mapping& alpha, const Problem& p,
                             unsigned jobs) {
  if (!alpha.PreservesEndpoints()) {
    throw PreconditionError(alpha.Name() + " does not preserve 0 and 1");
  }
  if (p.constraints.empty()) {
    throw PreconditionError("problem has no constraints");
  }
  Problem abstract = Translate(alpha, p);
  RecoveryResult r;
  r.concrete = Solve(p, jobs);
  r.abstract = Solve(abstract, jobs);
  r.abstract_optimal = r.abstract.optimal;
  for (std::size_t t : r.abstract_optimal) {
    r.concrete_values.push_back(r.concrete.values[t]);
    r.abstract_values.push_back(r.abstract.values[t]);
  }
  for (std::size_t k : MaximalPositions(p.semiring(), r.concrete_values)) {
    r.selected.push_back(r.abstract_optimal[k]);
  }
  if (CheckProperty(alpha, PropertyKind::kHomomorphism).ok()) {
    r.guarantee = Guarantee::kHomomorphism;
  } else if (CheckProperty(alpha, PropertyKind::kQuasiHomomorphism).ok()) {
    r.guarantee = Guarantee::kQuasiOnly;
  }
  for (std::size_t t : r.selected) {
    r.consistent.push_back(alpha.Apply(r.concrete.values[t]) ==
                           r.abstract.values[t]);
  }
  return r;
}

namespace {

using Accept = std::function<bool(const Semiring& t, const Value& image,
                                  const Value& abstract_value)>;

PropertyReport BoundCheck(const Mapping& alpha, const Problem& p,
                          const char* name, const Accept& accept) {
  const Semiring& s = p.semiring();
  const Semiring& t = *alpha.target();
  SolutionTable conc = Solve(p);
  SolutionTable abs = Solve(Translate(alpha, p));
  PropertyReport r;
  r.property = name;
  for (std::size_t ti : abs.optimal) {
    const Value& v = conc.values[ti];
    const Value& vt = abs.values[ti];
    bool found = false;
    for (std::size_t bi : conc.optimal) {
      ++r.evaluated;
      const Value& vb = conc.values[bi];
      if (s.Leq(v, vb) && accept(t, alpha.Apply(vb), vt)) {
        found = true;
        break;
      }
    }
    if (!found) {
      r.verdict = Verdict::kFail;
      r.reason = "no concrete optimum within the bound";
      r.witness = {{"t", Side::kTarget,
                    Value::Elem(static_cast<std::uint32_t>(ti))},
                   {"v", Side::kSource, v},
                   {"v~", Side::kTarget, vt}};
      return r;
    }
  }
  return r;
}

}  // namespace

PropertyReport QuasiBoundCheck(const Mapping& alpha, const Problem& p) {
  if (!CheckProperty(alpha, PropertyKind::kQuasiHomomorphism).ok()) {
    throw PreconditionError(alpha.Name() + " is not a quasi-homomorphism");
  }
  return BoundCheck(alpha, p, "quasi bound",
                    [](const Semiring& t, const Value& img, const Value& vt) {
                      return !t.Lt(vt, img);
                    });
}

PropertyReport StrongBoundCheck(const Mapping& alpha, const Problem& p) {
  return BoundCheck(alpha, p, "strong bound",
                    [](const Semiring& t, const Value& img, const Value& vt) {
                      return t.Leq(img, vt);
                    });
}

}  // namespace softabs
