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

#include "softabs/random_problem.h"

#include <algorithm>
#include <set>

namespace softabs {

Rng TrialRng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

namespace {

std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Value> Palette(const Semiring& s, Rng& rng, std::size_t size) {
  if (s.is_finite() && s.size() <= kMaxTabulatedCarrier) return s.Elements();
  std::vector<Value> out{s.zero(), s.one()};
  for (std::size_t i = 0; i < size; ++i) out.push_back(s.Sample(rng));
  return out;
}

}  // namespace

Problem RandomProblem(const SemiringPtr& s, Rng& rng,
                      const RandomProblemOptions& opts) {
  const std::size_t nv = Uniform(rng, opts.min_vars, opts.max_vars);
  const std::size_t nd = Uniform(rng, opts.min_domain, opts.max_domain);
  std::vector<std::string> vars, dom;
  for (std::size_t i = 0; i < nv; ++i) vars.push_back("v" + std::to_string(i + 1));
  for (std::size_t i = 0; i < nd; ++i) dom.push_back("d" + std::to_string(i + 1));
  auto system = std::make_shared<ConstraintSystem>(s, dom, vars);

  auto subset = [&](std::size_t k) {
    std::vector<VarId> all(nv);
    for (std::size_t i = 0; i < nv; ++i) all[i] = static_cast<VarId>(i);
    std::shuffle(all.begin(), all.end(), rng);
    Scope sc(all.begin(), all.begin() + k);
    std::sort(sc.begin(), sc.end());
    return sc;
  };
  Scope con = subset(Uniform(rng, 0, nv));

  std::vector<Value> palette = Palette(*s, rng, opts.palette);
  const std::size_t nc = Uniform(rng, 1, opts.max_constraints);
  std::set<Scope> used;
  std::vector<Constraint> cs;
  for (std::size_t c = 0; c < nc; ++c) {
    Scope sc = subset(Uniform(rng, 1, std::min(opts.max_arity, nv)));
    if (!used.insert(sc).second) continue;
    std::vector<Value> table(TupleCount(nd, sc.size()));
    for (Value& v : table) v = palette[Uniform(rng, 0, palette.size() - 1)];
    cs.emplace_back(std::move(sc), std::move(table), nd);
  }
  return MakeProblem(std::move(system), std::move(cs), std::move(con));
}

Problem RaiseProblem(const Problem& p, Rng& rng) {
  const Semiring& s = p.semiring();
  std::vector<Value> palette = Palette(s, rng, 4);
  std::vector<Constraint> cs;
  for (const Constraint& c : p.constraints) {
    std::vector<Value> table = c.table();
    for (Value& v : table) {
      if (Uniform(rng, 0, 2) == 0) {
        v = s.Sum(v, palette[Uniform(rng, 0, palette.size() - 1)]);
      }
    }
    cs.emplace_back(c.scope(), std::move(table), c.domain_size());
  }
  return MakeProblem(p.system, std::move(cs), p.con);
}

}  // namespace softabs
