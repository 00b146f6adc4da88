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

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "softabs/errors.h"

namespace softabs {

namespace {

void RequireUnique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw InputError(std::string("duplicate ") + what + " '" + n + "'");
    }
  }
}

}  // namespace

ConstraintSystem::ConstraintSystem(SemiringPtr semiring,
                                   std::vector<std::string> domain,
                                   std::vector<std::string> variables)
    : semiring_(std::move(semiring)),
      domain_(std::move(domain)),
      variables_(std::move(variables)) {
  if (!semiring_) throw InputError("constraint system needs a semiring");
  if (domain_.empty()) throw InputError("domain is empty");
  RequireUnique(domain_, "domain value");
  RequireUnique(variables_, "variable");
}

VarId ConstraintSystem::Var(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) {
    throw InputError("unknown variable '" + name + "'");
  }
  return static_cast<VarId>(it - variables_.begin());
}

std::uint32_t ConstraintSystem::DomainIndex(const std::string& name) const {
  auto it = std::find(domain_.begin(), domain_.end(), name);
  if (it == domain_.end()) {
    throw InputError("unknown domain value '" + name + "'");
  }
  return static_cast<std::uint32_t>(it - domain_.begin());
}

Scope ConstraintSystem::MakeScope(const std::vector<std::string>& names) const {
  Scope s;
  for (const auto& n : names) s.push_back(Var(n));
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw InputError("scope repeats a variable");
  }
  return s;
}

bool ConstraintSystem::SameAs(const ConstraintSystem& other) const {
  return this == &other ||
         (domain_ == other.domain_ && variables_ == other.variables_ &&
          semiring_->SameAs(*other.semiring_));
}

std::size_t TupleCount(std::size_t d, std::size_t k) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n > std::numeric_limits<std::size_t>::max() / d) {
      throw PreconditionError("tuple space too large");
    }
    n *= d;
  }
  return n;
}

Assignment TupleAt(std::size_t index, std::size_t d, std::size_t k) {
  Assignment t(k);
  for (std::size_t i = k; i-- > 0;) {
    t[i] = static_cast<std::uint32_t>(index % d);
    index /= d;
  }
  return t;
}

Constraint::Constraint(Scope scope, std::vector<Value> table,
                       std::size_t domain_size)
    : scope_(std::move(scope)),
      table_(std::move(table)),
      domain_size_(domain_size) {
  for (std::size_t i = 1; i < scope_.size(); ++i) {
    if (scope_[i - 1] >= scope_[i]) {
      throw InputError("scope must be strictly increasing");
    }
  }
  if (domain_size_ == 0) throw InputError("domain is empty");
  if (table_.size() != TupleCount(domain_size_, scope_.size())) {
    throw InputError("table has " + std::to_string(table_.size()) +
                     " entries, expected " +
                     std::to_string(TupleCount(domain_size_, scope_.size())));
  }
}

Constraint Constraint::Constant(const Value& v, Scope scope,
                                std::size_t domain_size) {
  std::vector<Value> table(TupleCount(domain_size, scope.size()), v);
  return Constraint(std::move(scope), std::move(table), domain_size);
}

Constraint Constraint::Trivial(const Semiring& s, Scope scope,
                               std::size_t domain_size) {
  return Constant(s.one(), std::move(scope), domain_size);
}

std::size_t Constraint::Offset(std::span<const std::uint32_t> t) const {
  if (t.size() != scope_.size()) {
    throw PreconditionError("tuple arity does not match the scope");
  }
  std::size_t off = 0;
  for (std::uint32_t v : t) {
    if (v >= domain_size_) throw PreconditionError("domain index out of range");
    off = off * domain_size_ + v;
  }
  return off;
}

bool Constraint::IsTrivial(const Semiring& s) const {
  return std::all_of(table_.begin(), table_.end(),
                     [&](const Value& v) { return v == s.one(); });
}

Problem MakeProblem(SystemPtr system, std::vector<Constraint> constraints,
                    Scope con) {
  const std::size_t nvars = system->variables().size();
  const Semiring& s = *system->semiring();
  auto check_scope = [&](const Scope& sc, const std::string& where) {
    for (std::size_t i = 0; i < sc.size(); ++i) {
      if (sc[i] >= nvars) throw InputError("unknown variable", where);
      if (i && sc[i - 1] >= sc[i]) {
        throw InputError("scope must be strictly increasing", where);
      }
    }
  };
  check_scope(con, "/con");
  std::set<Scope> scopes;
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const std::string where = "/constraints/" + std::to_string(k);
    const Constraint& c = constraints[k];
    check_scope(c.scope(), where + "/scope");
    if (c.domain_size() != system->domain_size()) {
      throw InputError("table built for another domain", where);
    }
    if (!scopes.insert(c.scope()).second) {
      throw InputError("two constraints share the same scope", where);
    }
    for (const Value& v : c.table()) {
      if (!s.Contains(v)) {
        throw InputError(v.DebugString() + " is not in the carrier of " +
                             s.Name(),
                         where);
      }
    }
  }
  return Problem{std::move(system), std::move(constraints), std::move(con)};
}

Assignment SolutionTable::TupleAt(std::size_t index) const {
  return softabs::TupleAt(index, domain_size, con.size());
}

std::vector<Assignment> SolutionTable::OptimalTuples() const {
  std::vector<Assignment> out;
  for (std::size_t i : optimal) out.push_back(TupleAt(i));
  return out;
}

Assignment ProjectTuple(std::span<const std::uint32_t> t, const Scope& x,
                        const Scope& y) {
  if (t.size() != x.size()) {
    throw PreconditionError("tuple arity does not match its variables");
  }
  Assignment out;
  out.reserve(y.size());
  for (VarId v : y) {
    auto it = std::find(x.begin(), x.end(), v);
    if (it == x.end()) {
      throw PreconditionError("projection target is not a subset");
    }
    out.push_back(t[it - x.begin()]);
  }
  return out;
}

Constraint Combine(const Semiring& s, std::span<const Constraint> cs) {
  if (cs.empty()) throw PreconditionError("nothing to combine");
  const std::size_t d = cs.front().domain_size();
  Scope joint;
  for (const Constraint& c : cs) {
    if (c.domain_size() != d) {
      throw PreconditionError("constraints over different domains");
    }
    Scope merged;
    std::set_union(joint.begin(), joint.end(), c.scope().begin(),
                   c.scope().end(), std::back_inserter(merged));
    joint = std::move(merged);
  }
  const std::size_t n = TupleCount(d, joint.size());
  std::vector<Value> table;
  table.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Assignment t = TupleAt(i, d, joint.size());
    Value acc = s.one();
    for (const Constraint& c : cs) {
      acc = s.Prod(acc, c.At(ProjectTuple(t, joint, c.scope())));
    }
    table.push_back(std::move(acc));
  }
  return Constraint(std::move(joint), std::move(table), d);
}

Constraint Project(const Semiring& s, const Constraint& c, const Scope& keep) {
  Scope kept;
  std::set_intersection(c.scope().begin(), c.scope().end(), keep.begin(),
                        keep.end(), std::back_inserter(kept));
  const std::size_t d = c.domain_size();
  std::vector<Value> table(TupleCount(d, kept.size()), s.zero());
  Constraint out(kept, table, d);
  for (std::size_t i = 0; i < c.size(); ++i) {
    Assignment t = TupleAt(i, d, c.scope().size());
    std::size_t off = out.Offset(ProjectTuple(t, c.scope(), kept));
    table[off] = s.Sum(table[off], c.table()[i]);
  }
  return Constraint(std::move(kept), std::move(table), d);
}

std::vector<Assignment> Optimals(const Problem& p) {
  return Solve(p).OptimalTuples();
}

bool ConstraintBelow(const Semiring& s, const Constraint& c1,
                     const Constraint& c2) {
  if (c1.scope() != c2.scope() || c1.domain_size() != c2.domain_size()) {
    throw PreconditionError("constraints have different types");
  }
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (!s.Leq(c1.table()[i], c2.table()[i])) return false;
  }
  return true;
}

bool ProblemBelow(const Problem& p1, const Problem& p2) {
  if (!p1.system->SameAs(*p2.system)) {
    throw PreconditionError("problems live in different constraint systems");
  }
  if (p1.con != p2.con) {
    throw PreconditionError("problems have different types");
  }
  const Semiring& s = p1.semiring();
  std::map<Scope, const Constraint*> by1, by2;
  for (const auto& c : p1.constraints) by1[c.scope()] = &c;
  for (const auto& c : p2.constraints) by2[c.scope()] = &c;
  // Scopes constrained by neither problem satisfy the second condition.
  std::set<Scope> scopes;
  for (auto& [sc, c] : by1) scopes.insert(sc);
  for (auto& [sc, c] : by2) scopes.insert(sc);
  for (const Scope& sc : scopes) {
    auto i1 = by1.find(sc);
    auto i2 = by2.find(sc);
    bool first = i1 != by1.end() && i2 != by2.end() &&
                 ConstraintBelow(s, *i1->second, *i2->second);
    bool second = i2 == by2.end() || i2->second->IsTrivial(s);
    if (!first && !second) return false;
  }
  return true;
}

bool ProblemEqual(const Problem& p1, const Problem& p2) {
  return ProblemBelow(p1, p2) && ProblemBelow(p2, p1);
}

}  // namespace softabs
