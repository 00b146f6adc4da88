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

#include <benchmark/benchmark.h>

#include "softabs/abstraction.h"
#include "softabs/catalog.h"
#include "softabs/random_problem.h"
#include "softabs/scsp.h"
#include "softabs/theorems.h"

namespace softabs {
namespace {

Problem Generate(const SemiringPtr& s, std::size_t vars, std::size_t domain) {
  RandomProblemOptions o;
  o.min_vars = o.max_vars = vars;
  o.min_domain = o.max_domain = domain;
  o.max_constraints = vars + 2;
  Rng rng = TrialRng(7, vars * 100 + domain);
  return RandomProblem(s, rng, o);
}

void BM_SolveWeighted(benchmark::State& state) {
  Problem p = Generate(MakeWeighted(), state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p));
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(TupleCount(4, state.range(0))));
}
BENCHMARK(BM_SolveWeighted)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_SolveFuzzy(benchmark::State& state) {
  Problem p = Generate(MakeFuzzy(), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p));
}
BENCHMARK(BM_SolveFuzzy)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

// Table semirings go through the index fast path.
void BM_SolveTable(benchmark::State& state) {
  Problem p = Generate(Catalog().back().semiring, state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Solve(p));
}
BENCHMARK(BM_SolveTable)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_Recover(benchmark::State& state) {
  const auto& homs = CatalogHomomorphisms(6);
  const MappingPtr& h = homs[homs.size() / 2].map;
  Problem p = Generate(h->source(), state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(RecoverOptima(*h, p));
}
BENCHMARK(BM_Recover)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyRecovery(benchmark::State& state) {
  TheoremOptions o;
  o.trials = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(VerifyTheorem("recovery", o));
}
BENCHMARK(BM_VerifyRecovery)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace softabs

BENCHMARK_MAIN();
