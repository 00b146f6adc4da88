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

#include "softabs/theorems.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <thread>

#include "softabs/abstraction.h"
#include "softabs/catalog.h"
#include "softabs/errors.h"
#include "softabs/json_io.h"
#include "softabs/property.h"
#include "softabs/shrink.h"
#include "softabs/witness.h"

namespace softabs {

namespace {

struct Counterexample {
  std::string claim;
  MappingPtr alpha;
  std::optional<Problem> problem;
  std::optional<Problem> other;
  // When set, the problem is minimized against it before reporting.
  FailurePredicate fails;
};
using Outcome = std::optional<Counterexample>;
using Found = std::optional<std::pair<std::size_t, Counterexample>>;

// Runs fn(0..count) in contiguous chunks, one thread per chunk, and returns
// the failure with the smallest index.
Found RunTrials(std::size_t count, unsigned jobs,
                const std::function<Outcome(std::size_t)>& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  std::vector<Found> found(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    const std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
    try {
      for (std::size_t i = lo; i < hi; ++i) {
        if (Outcome c = fn(i)) {
          found[w].emplace(i, std::move(*c));
          return;
        }
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& f : found) {
    if (f) return f;
  }
  return std::nullopt;
}

std::size_t Pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool SolBelow(const Semiring& s, const SolutionTable& a,
              const SolutionTable& b) {
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!s.Leq(a.values[i], b.values[i])) return false;
  }
  return true;
}

bool OptimaKept(const Mapping& alpha, const Problem& p) {
  const SolutionTable conc = Solve(p);
  const SolutionTable abs = Solve(Translate(alpha, p));
  return std::includes(abs.optimal.begin(), abs.optimal.end(),
                       conc.optimal.begin(), conc.optimal.end());
}

// Sol(P) computed the long way: combine everything, then project.
SolutionTable CombineProject(const Problem& p) {
  const Semiring& s = p.semiring();
  const std::size_t d = p.system->domain_size();
  std::vector<Constraint> all = p.constraints;
  all.push_back(Constraint::Trivial(s, p.con, d));
  Constraint c = Project(s, Combine(s, all), p.con);
  SolutionTable t;
  t.con = p.con;
  t.domain_size = d;
  t.values = c.table();
  t.optimal = MaximalPositions(s, t.values);
  return t;
}

Budget Exact(const TheoremOptions& opts) {
  Budget b = opts.budget;
  b.set_size = 3;
  return b;
}

bool Certifies(const MappingPtr& m, PropertyKind k, const Budget& b) {
  return CheckProperty(*m, k, nullptr, b).ok();
}

// Every endpoint-preserving map between catalog entries of at most `bound`
// elements, pair by pair in catalog order.
std::vector<MappingPtr> ScanMaps(std::size_t bound, bool total_source = false) {
  std::vector<MappingPtr> out;
  auto sources = total_source ? TotallyOrdered(bound) : CatalogUpTo(bound);
  for (const auto& s : sources) {
    for (const auto& t : CatalogUpTo(bound)) {
      auto maps = EndpointMaps(s.semiring, t.semiring);
      out.insert(out.end(), maps.begin(), maps.end());
    }
  }
  return out;
}

// Threshold maps out of the unit interval into chains, and rank-preserving
// maps from catalog chains into the unit interval.
std::vector<MappingPtr> ChainExtras(std::size_t bound) {
  std::vector<MappingPtr> out;
  SemiringPtr fuzzy = MakeFuzzy();
  SemiringPtr prob = MakeProbabilistic();
  SemiringPtr boolean = MakeBoolean();
  const Value lo = Value::Bool(false), hi = Value::Bool(true);
  for (auto [n, d] : {std::pair{1, 4}, {1, 2}, {3, 4}, {1, 1}, {0, 1}}) {
    out.push_back(MakeThreshold(fuzzy, boolean, Value::Unit(Rational(n, d)),
                                lo, hi));
  }
  for (auto [n, d] : {std::pair{1, 1}, {0, 1}}) {
    out.push_back(
        MakeThreshold(prob, boolean, Value::Unit(Rational(n, d)), lo, hi));
  }
  for (const auto& c : TotallyOrdered(bound)) {
    const Semiring& s = *c.semiring;
    if (s.size() < 3) continue;
    out.push_back(MakeThreshold(fuzzy, c.semiring, Value::Unit(Rational(1, 2)),
                                s.zero(), s.one()));
    std::vector<Value> images;
    for (const Value& x : s.Elements()) {
      std::int64_t rank = 0;
      for (const Value& y : s.Elements()) rank += s.Lt(y, x) ? 1 : 0;
      images.push_back(Value::Unit(
          Rational(rank, static_cast<std::int64_t>(s.size()) - 1)));
    }
    out.push_back(MakeTableMapping(c.semiring, fuzzy, std::move(images)));
  }
  return out;
}

// Sum and product witness problems for a mapping whose homomorphism check
// failed; returns a counterexample unless they break problem ordering.
Outcome ExpectOrderingViolation(const MappingPtr& alpha,
                                const PropertyReport& hom) {
  const Value* a = hom.Find("a");
  const Value* b = hom.Find("b");
  if (hom.reason != "sum" && hom.reason != "product") {
    return Counterexample{"homomorphism failure outside sum/product: " +
                              hom.reason,
                          alpha, {}, {}, {}};
  }
  SystemPtr sys = WitnessSystem(alpha->source());
  WitnessPair w = hom.reason == "sum"
                      ? WitnessSumProblem(sys, *a, *b, Scope{0})
                      : WitnessProdProblem(sys, *a, *b, Scope{0});
  const Semiring& s = *alpha->source();
  const Semiring& t = *alpha->target();
  SolutionTable sp = Solve(w.p), sq = Solve(w.q);
  SolutionTable ap = Solve(Translate(*alpha, w.p));
  SolutionTable aq = Solve(Translate(*alpha, w.q));
  const bool equal = SolBelow(s, sp, sq) && SolBelow(s, sq, sp);
  const bool kept = SolBelow(t, ap, aq) && SolBelow(t, aq, ap);
  if (equal && !kept) return std::nullopt;
  return Counterexample{
      "witness pair (" + w.claim + ") does not break problem ordering", alpha,
      w.p, w.q, {}};
}

// For a homomorphism that is not order-reflecting: a sum-of-products
// witness whose concrete optimum is lost after translation.
Outcome ExpectOptimumLoss(const MappingPtr& alpha, const Budget& budget) {
  for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
    PropertyReport r = CheckSumOfProducts(*alpha, m, n, budget);
    if (r.ok()) continue;
    auto reshape = [&](const std::string& name) {
      std::vector<Value> flat = r.Collect(name + "[");
      std::vector<std::vector<Value>> rows(n);
      for (std::size_t k = 0; k < flat.size(); ++k) {
        rows[k / m].push_back(flat[k]);
      }
      return rows;
    };
    Problem p = WitnessSumOfProductsProblem(alpha->source(), reshape("U"),
                                            reshape("V"));
    if (!OptimaKept(*alpha, p)) return std::nullopt;
    return Counterexample{"sum-of-products witness keeps every optimum", alpha,
                          p, {}, {}};
  }
  return Counterexample{"no sum-of-products witness up to 2x2", alpha, {}, {},
                        {}};
}

struct Tally {
  std::atomic<std::uint64_t> trials{0};
  std::atomic<std::uint64_t> cases{0};
  std::atomic<bool> sampled{false};
};

using Runner = std::function<Found(const TheoremOptions&, Tally&)>;

Found OrderingSufficiency(const TheoremOptions& opts, Tally& tally) {
  const auto& homs = CatalogHomomorphisms(opts.max_carrier);
  return RunTrials(opts.trials, opts.jobs, [&](std::size_t i) -> Outcome {
    Rng rng = TrialRng(opts.seed, i);
    const MappingPtr& h = homs[Pick(rng, homs.size())].map;
    Problem p = RandomProblem(h->source(), rng, opts.problems);
    Problem q = RaiseProblem(p, rng);
    if (q.constraints.size() > 1 && Pick(rng, 2) == 0) {
      q.constraints.erase(q.constraints.begin() + Pick(rng, q.constraints.size()));
    }
    ++tally.trials;
    if (!SolBelow(p.semiring(), Solve(p), Solve(q))) return std::nullopt;
    ++tally.cases;
    const Semiring& t = *h->target();
    if (SolBelow(t, Solve(Translate(*h, p)), Solve(Translate(*h, q)))) {
      return std::nullopt;
    }
    return Counterexample{"homomorphism does not preserve problem ordering", h,
                          p, q, {}};
  });
}

Found OrderingNecessity(const TheoremOptions& opts, Tally& tally) {
  const auto maps = ScanMaps(opts.scan_carrier);
  const Budget budget = Exact(opts);
  return RunTrials(maps.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    PropertyReport hom =
        CheckProperty(*maps[i], PropertyKind::kHomomorphism, nullptr, budget);
    if (hom.ok()) return std::nullopt;
    ++tally.cases;
    return ExpectOrderingViolation(maps[i], hom);
  });
}

Found OptimaPreservation(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  // Grouped by source so each random problem is solved once per source.
  std::map<std::size_t, std::vector<MappingPtr>> by_source;
  for (const auto& h : CatalogHomomorphisms(opts.max_carrier)) {
    if (Certifies(h.map, PropertyKind::kOrderReflecting, budget)) {
      by_source[h.source].push_back(h.map);
    }
  }
  std::vector<const std::vector<MappingPtr>*> groups;
  for (const auto& [src, maps] : by_source) groups.push_back(&maps);
  const std::size_t forward = opts.trials * groups.size();
  Found f = RunTrials(forward, opts.jobs, [&](std::size_t i) -> Outcome {
    const auto& maps = *groups[i % groups.size()];
    Rng rng = TrialRng(opts.seed, i);
    Problem p = RandomProblem(maps.front()->source(), rng, opts.problems);
    const SolutionTable conc = Solve(p);
    for (const MappingPtr& h : maps) {
      ++tally.trials;
      const SolutionTable abs = Solve(Translate(*h, p));
      if (std::includes(abs.optimal.begin(), abs.optimal.end(),
                        conc.optimal.begin(), conc.optimal.end())) {
        continue;
      }
      return Counterexample{
          "order-reflecting homomorphism loses an optimum", h, p, {},
          [h](const Problem& q) { return !OptimaKept(*h, q); }};
    }
    return std::nullopt;
  });
  if (f) return f;
  const auto maps = ScanMaps(opts.scan_carrier);
  return RunTrials(maps.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    const MappingPtr& m = maps[i];
    PropertyReport hom =
        CheckProperty(*m, PropertyKind::kHomomorphism, nullptr, budget);
    if (!hom.ok()) {
      ++tally.cases;
      return ExpectOrderingViolation(m, hom);
    }
    if (Certifies(m, PropertyKind::kOrderReflecting, budget)) {
      return std::nullopt;
    }
    ++tally.cases;
    return ExpectOptimumLoss(m, budget);
  });
}

bool RecoveryHolds(const Mapping& h, const Problem& p) {
  RecoveryResult r = RecoverOptima(h, p);
  SolutionTable oracle = CombineProject(p);
  if (r.guarantee != Guarantee::kHomomorphism) return false;
  if (oracle.values != r.concrete.values) return false;
  if (!std::includes(oracle.optimal.begin(), oracle.optimal.end(),
                     r.selected.begin(), r.selected.end())) {
    return false;
  }
  for (std::size_t i = 0; i < r.concrete.values.size(); ++i) {
    if (h.Apply(r.concrete.values[i]) != r.abstract.values[i]) return false;
  }
  return std::all_of(r.consistent.begin(), r.consistent.end(),
                     [](bool b) { return b; });
}

Found Recovery(const TheoremOptions& opts, Tally& tally) {
  const auto& homs = CatalogHomomorphisms(opts.max_carrier);
  return RunTrials(opts.trials, opts.jobs, [&](std::size_t i) -> Outcome {
    Rng rng = TrialRng(opts.seed, i);
    const MappingPtr& h = homs[Pick(rng, homs.size())].map;
    Problem p = RandomProblem(h->source(), rng, opts.problems);
    ++tally.trials;
    if (RecoveryHolds(*h, p)) return std::nullopt;
    return Counterexample{"recovered tuples are not all optimal", h, p, {},
                          [h](const Problem& q) { return !RecoveryHolds(*h, q); }};
  });
}

Found QuasiBound(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  std::vector<MappingPtr> quasi;
  for (const auto& m : ScanMaps(opts.scan_carrier)) {
    if (Certifies(m, PropertyKind::kQuasiHomomorphism, budget)) {
      quasi.push_back(m);
    }
  }
  SetsExample ex = MakeSetsExample();
  ++tally.cases;
  if (Certifies(ex.alpha, PropertyKind::kHomomorphism, budget) ||
      !Certifies(ex.alpha, PropertyKind::kQuasiHomomorphism, budget) ||
      !QuasiBoundCheck(*ex.alpha, ex.problem).ok() ||
      StrongBoundCheck(*ex.alpha, ex.problem).ok()) {
    return std::pair{std::size_t{0},
                     Counterexample{"two-sets example does not separate the "
                                    "bounds",
                                    ex.alpha, ex.problem, {}, {}}};
  }
  quasi.push_back(ex.alpha);
  return RunTrials(opts.trials, opts.jobs, [&](std::size_t i) -> Outcome {
    Rng rng = TrialRng(opts.seed, i);
    const MappingPtr& h = quasi[Pick(rng, quasi.size())];
    Problem p = RandomProblem(h->source(), rng, opts.problems);
    ++tally.trials;
    if (QuasiBoundCheck(*h, p).ok()) return std::nullopt;
    return Counterexample{
        "quasi-homomorphism bound fails", h, p, {},
        [h](const Problem& q) { return !QuasiBoundCheck(*h, q).ok(); }};
  });
}

Found OrderPreservingScan(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  SetsExample ex = MakeSetsExample();
  AdjointSearch sets = FindUpperAdjoint(ex.alpha);
  ++tally.cases;
  if (!sets.pair || !sets.pair->insertion ||
      !CheckProperty(*ex.alpha, PropertyKind::kAbstraction,
                     sets.pair->upper.get(), budget)
           .ok() ||
      CheckProperty(*ex.alpha, PropertyKind::kOrderPreserving,
                    sets.pair->upper.get(), budget)
          .ok()) {
    return std::pair{std::size_t{0},
                     Counterexample{"two-sets example is not an abstraction "
                                    "failing order preservation",
                                    ex.alpha, {}, {}, {}}};
  }
  const auto maps = ScanMaps(opts.scan_carrier);
  return RunTrials(maps.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    const MappingPtr& m = maps[i];
    if (!Certifies(m, PropertyKind::kMonotonic, budget)) return std::nullopt;
    AdjointSearch adj = FindUpperAdjoint(m);
    if (!adj.pair || !adj.pair->insertion) return std::nullopt;
    ++tally.cases;
    const bool op = CheckProperty(*m, PropertyKind::kOrderPreserving,
                                  adj.pair->upper.get(), budget)
                        .ok();
    const bool iso = Certifies(m, PropertyKind::kIsomorphism, budget);
    if (op == iso) return std::nullopt;
    return Counterexample{op ? "order-preserving insertion that is not an "
                               "isomorphism"
                             : "isomorphism that is not order-preserving",
                          m, {}, {}, {}};
  });
}

Found AggregationHomomorphism(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  std::vector<MappingPtr> maps;
  for (const auto& s : TotallyOrdered(opts.scan_carrier)) {
    for (const auto& t : TotallyOrdered(opts.scan_carrier)) {
      auto ms = EndpointMaps(s.semiring, t.semiring);
      maps.insert(maps.end(), ms.begin(), ms.end());
    }
  }
  for (const auto& m : ChainExtras(opts.scan_carrier)) maps.push_back(m);
  return RunTrials(maps.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    const MappingPtr& m = maps[i];
    ++tally.cases;
    PropertyReport agg = CheckProperty(
        *m, PropertyKind::kAggregationCompatible, nullptr, budget);
    PropertyReport hom =
        CheckProperty(*m, PropertyKind::kHomomorphism, nullptr, budget);
    if (!agg.exhaustive || !hom.exhaustive) tally.sampled = true;
    if (agg.ok() == hom.ok()) return std::nullopt;
    return Counterexample{agg.ok() ? "aggregation-compatible map that is not "
                                     "a homomorphism"
                                   : "homomorphism that is not "
                                     "aggregation-compatible",
                          m, {}, {}, {}};
  });
}

Found ChainReflection(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  std::vector<MappingPtr> maps = ScanMaps(opts.scan_carrier, true);
  for (const auto& m : ChainExtras(opts.scan_carrier)) maps.push_back(m);
  return RunTrials(maps.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    const MappingPtr& m = maps[i];
    PropertyReport mono =
        CheckProperty(*m, PropertyKind::kMonotonic, nullptr, budget);
    if (!mono.ok()) return std::nullopt;
    ++tally.cases;
    PropertyReport r =
        CheckProperty(*m, PropertyKind::kOrderReflecting, nullptr, budget);
    if (!mono.exhaustive || !r.exhaustive) tally.sampled = true;
    if (r.ok()) return std::nullopt;
    return Counterexample{"monotone map out of a chain does not reflect order",
                          m, {}, {}, {}};
  });
}

Found ChainOptima(const TheoremOptions& opts, Tally& tally) {
  const Budget budget = Exact(opts);
  std::vector<MappingPtr> homs;
  for (const auto& h : CatalogHomomorphisms(opts.max_carrier)) {
    if (h.map->source()->is_total()) homs.push_back(h.map);
  }
  for (const auto& m : ChainExtras(opts.scan_carrier)) {
    PropertyReport r =
        CheckProperty(*m, PropertyKind::kHomomorphism, nullptr, budget);
    if (!r.ok()) continue;
    if (!r.exhaustive) tally.sampled = true;
    homs.push_back(m);
  }
  return RunTrials(opts.trials, opts.jobs, [&](std::size_t i) -> Outcome {
    Rng rng = TrialRng(opts.seed, i);
    const MappingPtr& h = homs[Pick(rng, homs.size())];
    Problem p = RandomProblem(h->source(), rng, opts.problems);
    ++tally.trials;
    if (OptimaKept(*h, p)) return std::nullopt;
    return Counterexample{"homomorphism out of a chain loses an optimum", h, p,
                          {}, [h](const Problem& q) { return !OptimaKept(*h, q); }};
  });
}

const std::vector<std::pair<std::string, Runner>>& Runners() {
  static const std::vector<std::pair<std::string, Runner>> runners{
      {"ordering_sufficiency", OrderingSufficiency},
      {"ordering_necessity", OrderingNecessity},
      {"optima_preservation", OptimaPreservation},
      {"recovery", Recovery},
      {"quasi_bound", QuasiBound},
      {"order_preserving_scan", OrderPreservingScan},
      {"aggregation_homomorphism", AggregationHomomorphism},
      {"chain_reflection", ChainReflection},
      {"chain_optima", ChainOptima},
  };
  return runners;
}

}  // namespace

const std::vector<std::string>& TheoremIds() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& r : Runners()) out.push_back(r.first);
    return out;
  }();
  return ids;
}

TheoremReport VerifyTheorem(std::string_view id, const TheoremOptions& opts) {
  auto it = std::find_if(Runners().begin(), Runners().end(),
                         [&](const auto& r) { return r.first == id; });
  if (it == Runners().end()) {
    throw InputError("unknown theorem '" + std::string(id) + "'", "/theorem");
  }
  if (opts.max_carrier < 2 || opts.max_carrier > 6 || opts.scan_carrier < 2 ||
      opts.scan_carrier > 5) {
    throw PreconditionError("catalog bounds must be within 2..6 (scans 2..5)");
  }
  const auto& po = opts.problems;
  if (po.max_vars > 6 || po.max_domain > 4 || po.max_arity > 4 ||
      po.min_vars < 1 || po.min_vars > po.max_vars || po.min_domain < 1 ||
      po.min_domain > po.max_domain) {
    throw PreconditionError("problem bounds exceed |V| <= 6, |D| <= 4");
  }

  Tally tally;
  Found found = it->second(opts, tally);

  TheoremReport out;
  out.report.property = it->first;
  out.trials = tally.trials;
  out.cases = tally.cases;
  out.report.evaluated = out.trials + out.cases;
  out.report.exhaustive = !tally.sampled;
  if (found) {
    Counterexample& c = found->second;
    out.report.verdict = Verdict::kFail;
    out.report.reason = c.claim;
    nlohmann::json rep{{"claim", c.claim}, {"mapping", c.alpha->Descriptor()},
             {"index", found->first}};
    if (c.problem) {
      Problem p = c.fails ? Shrink(*c.problem, c.fails) : *c.problem;
      rep["problem"] = ProblemToJson(p);
    }
    if (c.other) rep["other"] = ProblemToJson(*c.other);
    out.reproducer = std::move(rep);
    out.summary = it->first + ": counterexample at index " +
                  std::to_string(found->first) + " (" + c.claim + ")";
  } else {
    out.report.verdict = tally.sampled ? Verdict::kSampledPass : Verdict::kPass;
    out.summary = it->first + ": " + std::string(VerdictName(out.report.verdict)) +
                  " over " + std::to_string(out.trials) + " random instances and " +
                  std::to_string(out.cases) + " scanned cases";
  }
  out.report.note = out.summary;
  return out;
}

nlohmann::json TheoremReportToJson(const TheoremReport& r) {
  nlohmann::json out{{"theorem", r.report.property},
                     {"verdict", VerdictName(r.report.verdict)},
                     {"exhaustive", r.report.exhaustive},
                     {"trials", r.trials},
                     {"cases", r.cases},
                     {"summary", r.summary}};
  if (!r.report.reason.empty()) out["reason"] = r.report.reason;
  if (r.reproducer) out["reproducer"] = *r.reproducer;
  return out;
}

}  // namespace softabs
