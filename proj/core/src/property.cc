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

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>

#include "softabs/axioms.h"
#include "softabs/errors.h"

namespace softabs {

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSampledPass:
      return "sampled-pass";
  }
  return "?";
}

const Value* PropertyReport::Find(std::string_view label) const {
  for (const auto& w : witness) {
    if (w.label == label) return &w.value;
  }
  return nullptr;
}

std::vector<Value> PropertyReport::Collect(std::string_view prefix) const {
  std::vector<Value> out;
  for (const auto& w : witness) {
    if (std::string_view(w.label).substr(0, prefix.size()) == prefix) {
      out.push_back(w.value);
    }
  }
  return out;
}

namespace {

// Past this many distinct (concrete, abstract) pairs per level the scan
// keeps only the first ones and downgrades to a sampled verdict.
constexpr std::size_t kMaxPairs = 4096;

void Fail(PropertyReport& r, std::string reason,
          std::vector<WitnessEntry> witness) {
  r.verdict = Verdict::kFail;
  r.reason = std::move(reason);
  r.witness = std::move(witness);
}

WitnessEntry Src(std::string label, const Value& v) {
  return {std::move(label), Side::kSource, v};
}
WitnessEntry Tgt(std::string label, const Value& v) {
  return {std::move(label), Side::kTarget, v};
}

// Source pool plus images, shared by the element-wise checks.
struct Images {
  std::vector<Value> xs;
  std::vector<Value> ys;
  bool exhaustive = true;
};

Images ImagePool(const Mapping& alpha, const Budget& budget,
                 std::size_t arity) {
  CarrierPool pool = MakePool(*alpha.source(), budget, arity, budget.samples);
  Images out;
  out.exhaustive = pool.exhaustive;
  out.xs = std::move(pool.values);
  out.ys.reserve(out.xs.size());
  for (const Value& x : out.xs) out.ys.push_back(alpha.Apply(x));
  return out;
}

bool CheckEndpoints(const Mapping& alpha, PropertyReport& r) {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  r.evaluated += 2;
  if (alpha.Apply(s.zero()) != t.zero()) {
    Fail(r, "zero", {Src("a", s.zero())});
    return false;
  }
  if (alpha.Apply(s.one()) != t.one()) {
    Fail(r, "one", {Src("a", s.one())});
    return false;
  }
  return true;
}

bool CheckMonotone(const Mapping& alpha, const Images& im, PropertyReport& r,
                   const char* reason = "monotonicity") {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  for (std::size_t i = 0; i < im.xs.size(); ++i) {
    for (std::size_t j = 0; j < im.xs.size(); ++j) {
      ++r.evaluated;
      if (s.Leq(im.xs[i], im.xs[j]) && !t.Leq(im.ys[i], im.ys[j])) {
        Fail(r, reason, {Src("a", im.xs[i]), Src("b", im.xs[j])});
        return false;
      }
    }
  }
  return true;
}

enum class ProdRule { kExact, kBound };

bool CheckOps(const Mapping& alpha, const Images& im, PropertyReport& r,
              bool sums, std::optional<ProdRule> prods,
              const char* bound_reason = "product bound") {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  if (sums) {
    for (std::size_t i = 0; i < im.xs.size(); ++i) {
      for (std::size_t j = 0; j < im.xs.size(); ++j) {
        ++r.evaluated;
        if (alpha.Apply(s.Sum(im.xs[i], im.xs[j])) !=
            t.Sum(im.ys[i], im.ys[j])) {
          Fail(r, "sum", {Src("a", im.xs[i]), Src("b", im.xs[j])});
          return false;
        }
      }
    }
  }
  if (prods) {
    for (std::size_t i = 0; i < im.xs.size(); ++i) {
      for (std::size_t j = 0; j < im.xs.size(); ++j) {
        ++r.evaluated;
        Value lhs = alpha.Apply(s.Prod(im.xs[i], im.xs[j]));
        Value rhs = t.Prod(im.ys[i], im.ys[j]);
        bool ok = *prods == ProdRule::kExact ? lhs == rhs : t.Leq(lhs, rhs);
        if (!ok) {
          Fail(r, *prods == ProdRule::kExact ? "product" : bound_reason,
               {Src("a", im.xs[i]), Src("b", im.xs[j])});
          return false;
        }
      }
    }
  }
  return true;
}

bool CheckBijective(const Mapping& alpha, const Images& im,
                    PropertyReport& r) {
  const Semiring& t = *alpha.target();
  std::unordered_map<Value, std::size_t, ValueHash> seen;
  for (std::size_t i = 0; i < im.xs.size(); ++i) {
    ++r.evaluated;
    auto [it, fresh] = seen.try_emplace(im.ys[i], i);
    if (!fresh) {
      Fail(r, "injectivity", {Src("a", im.xs[it->second]), Src("b", im.xs[i])});
      return false;
    }
  }
  if (!im.exhaustive) {
    r.note = "surjectivity is not certified on a sampled source";
    return true;
  }
  if (t.is_finite() && t.size() <= kMaxTabulatedCarrier) {
    for (const Value& y : t.Elements()) {
      ++r.evaluated;
      if (!seen.count(y)) {
        Fail(r, "surjectivity", {Tgt("y", y)});
        return false;
      }
    }
    return true;
  }
  // A finite source cannot cover an infinite or huge target; exhibit a
  // missed value.
  Rng rng(0);
  for (int tries = 0; tries < 1024; ++tries) {
    Value y = t.Sample(rng);
    ++r.evaluated;
    if (!seen.count(y)) {
      Fail(r, "surjectivity", {Tgt("y", y)});
      return false;
    }
  }
  r.note = "surjectivity could not be refuted by sampling";
  return true;
}

void CheckAdjointShapes(const Mapping& alpha, const Mapping* gamma,
                        PropertyKind which) {
  if (!gamma) {
    throw PreconditionError(std::string(PropertyName(which)) +
                            " needs an upper adjoint");
  }
  if (!gamma->source()->SameAs(*alpha.target()) ||
      !gamma->target()->SameAs(*alpha.source())) {
    throw PreconditionError("upper adjoint must map " +
                            alpha.target()->Name() + " back to " +
                            alpha.source()->Name());
  }
}

bool CheckGalois(const Mapping& alpha, const Mapping& gamma,
                 const Budget& budget, PropertyReport& r) {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  Images lower = ImagePool(alpha, budget, 2);
  Images upper = ImagePool(gamma, budget, 2);
  r.exhaustive = lower.exhaustive && upper.exhaustive;
  if (!CheckMonotone(alpha, lower, r, "lower monotonicity")) return false;
  for (std::size_t i = 0; i < upper.xs.size(); ++i) {
    for (std::size_t j = 0; j < upper.xs.size(); ++j) {
      ++r.evaluated;
      if (t.Leq(upper.xs[i], upper.xs[j]) &&
          !s.Leq(upper.ys[i], upper.ys[j])) {
        Fail(r, "upper monotonicity",
             {Tgt("y", upper.xs[i]), Tgt("z", upper.xs[j])});
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < lower.xs.size(); ++i) {
    for (std::size_t j = 0; j < upper.xs.size(); ++j) {
      ++r.evaluated;
      bool left = t.Leq(lower.ys[i], upper.xs[j]);
      bool right = s.Leq(lower.xs[i], upper.ys[j]);
      if (left != right) {
        Fail(r, "adjunction", {Src("a", lower.xs[i]), Tgt("y", upper.xs[j])});
        return false;
      }
    }
  }
  for (std::size_t j = 0; j < upper.xs.size(); ++j) {
    ++r.evaluated;
    if (alpha.Apply(upper.ys[j]) != upper.xs[j]) {
      Fail(r, "insertion", {Tgt("y", upper.xs[j])});
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Achievable (concrete, abstract) pairs.

struct Achieved {
  Value conc;
  Value abs;
  std::vector<Value> rep;
};

struct PairKey {
  const Value* conc;
  const Value* abs;
};

class PairSet {
 public:
  // False when the pair was already present.
  bool Insert(Achieved a) {
    std::size_t h = a.conc.Hash() * 1000003u ^ a.abs.Hash();
    auto& bucket = index_[h];
    for (std::size_t k : bucket) {
      if (items_[k].conc == a.conc && items_[k].abs == a.abs) return false;
    }
    bucket.push_back(items_.size());
    items_.push_back(std::move(a));
    return true;
  }
  std::size_t size() const { return items_.size(); }
  const std::vector<Achieved>& items() const { return items_; }

 private:
  std::vector<Achieved> items_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
};

struct PairScan {
  std::vector<Achieved> pairs;
  bool exhaustive = true;
};

using Combine = std::function<Value(const Value&, const Value&)>;

// Extends every item of `level` by one more element of `base`, combining
// concrete and abstract sides with the given operations.
PairSet Extend(const std::vector<Achieved>& level,
               const std::vector<Achieved>& base, const Combine& conc_op,
               const Combine& abs_op, PropertyReport& r, bool& truncated) {
  PairSet next;
  for (const Achieved& p : level) {
    for (const Achieved& b : base) {
      ++r.evaluated;
      if (next.size() >= kMaxPairs) {
        truncated = true;
        return next;
      }
      Achieved a{conc_op(p.conc, b.conc), abs_op(p.abs, b.abs), p.rep};
      a.rep.insert(a.rep.end(), b.rep.begin(), b.rep.end());
      next.Insert(std::move(a));
    }
  }
  return next;
}

std::vector<Achieved> Singletons(const Mapping& alpha,
                                 const std::vector<Value>& pool) {
  std::vector<Achieved> out;
  for (const Value& x : pool) out.push_back({x, alpha.Apply(x), {x}});
  return out;
}

// Products of nonempty multisets of size <= k.
PairScan ProductPairs(const Mapping& alpha, const Budget& budget,
                      PropertyReport& r) {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  CarrierPool pool = MakePool(s, budget, 1, budget.set_pool);
  PairScan scan;
  scan.exhaustive = pool.exhaustive;
  std::vector<Achieved> base = Singletons(alpha, pool.values);
  PairSet all;
  for (const auto& a : base) all.Insert(a);
  std::vector<Achieved> level = base;
  bool truncated = false;
  for (std::size_t size = 2; size <= budget.set_size && !truncated; ++size) {
    PairSet next = Extend(
        level, base, [&](auto& a, auto& b) { return s.Prod(a, b); },
        [&](auto& a, auto& b) { return t.Prod(a, b); }, r, truncated);
    for (const auto& a : next.items()) all.Insert(a);
    level = next.items();
  }
  if (truncated) scan.exhaustive = false;
  scan.pairs = all.items();
  return scan;
}

std::vector<WitnessEntry> SetWitness(const Achieved& p, const Achieved& q) {
  std::vector<WitnessEntry> w;
  for (std::size_t i = 0; i < p.rep.size(); ++i) {
    w.push_back(Src("I1[" + std::to_string(i) + "]", p.rep[i]));
  }
  for (std::size_t i = 0; i < q.rep.size(); ++i) {
    w.push_back(Src("I2[" + std::to_string(i) + "]", q.rep[i]));
  }
  return w;
}

bool CheckOrderPreservation(const Mapping& alpha, const Budget& budget,
                            PropertyReport& r) {
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  PairScan scan = ProductPairs(alpha, budget, r);
  r.exhaustive = r.exhaustive && scan.exhaustive;
  for (const auto& p : scan.pairs) {
    for (const auto& q : scan.pairs) {
      ++r.evaluated;
      if (t.Leq(p.abs, q.abs) && !s.Leq(p.conc, q.conc)) {
        Fail(r, "order preservation", SetWitness(p, q));
        return false;
      }
    }
  }
  return true;
}

bool CheckAggregation(const Mapping& alpha, const Budget& budget,
                      PropertyReport& r) {
  const Semiring& t = *alpha.target();
  PairScan scan = ProductPairs(alpha, budget, r);
  r.exhaustive = r.exhaustive && scan.exhaustive;
  std::vector<Value> mapped;
  mapped.reserve(scan.pairs.size());
  for (const auto& p : scan.pairs) mapped.push_back(alpha.Apply(p.conc));
  for (std::size_t i = 0; i < scan.pairs.size(); ++i) {
    for (std::size_t j = 0; j < scan.pairs.size(); ++j) {
      ++r.evaluated;
      if (t.Leq(mapped[i], mapped[j]) &&
          !t.Leq(scan.pairs[i].abs, scan.pairs[j].abs)) {
        Fail(r, "aggregation", SetWitness(scan.pairs[i], scan.pairs[j]));
        return false;
      }
    }
  }
  return true;
}

PropertyReport Finish(PropertyReport r) {
  if (r.verdict != Verdict::kFail && !r.exhaustive) {
    r.verdict = Verdict::kSampledPass;
  }
  return r;
}

PropertyReport Run(const Mapping& alpha, PropertyKind which,
                   const Mapping* gamma, const Budget& budget) {
  PropertyReport r;
  r.property = std::string(PropertyName(which));
  switch (which) {
    case PropertyKind::kMonotonic: {
      Images im = ImagePool(alpha, budget, 2);
      r.exhaustive = im.exhaustive;
      CheckMonotone(alpha, im, r);
      break;
    }
    case PropertyKind::kHomomorphism:
    case PropertyKind::kQuasiHomomorphism:
    case PropertyKind::kIsomorphism: {
      Images im = ImagePool(alpha, budget, 2);
      r.exhaustive = im.exhaustive;
      ProdRule rule = which == PropertyKind::kQuasiHomomorphism
                          ? ProdRule::kBound
                          : ProdRule::kExact;
      if (CheckEndpoints(alpha, r) && CheckOps(alpha, im, r, true, rule) &&
          which == PropertyKind::kIsomorphism) {
        CheckBijective(alpha, im, r);
      }
      break;
    }
    case PropertyKind::kOrderReflecting: {
      Images im = ImagePool(alpha, budget, 2);
      r.exhaustive = im.exhaustive;
      const Semiring& s = *alpha.source();
      const Semiring& t = *alpha.target();
      for (std::size_t i = 0; i < im.xs.size() && r.ok(); ++i) {
        for (std::size_t j = 0; j < im.xs.size(); ++j) {
          ++r.evaluated;
          if (t.Lt(im.ys[i], im.ys[j]) && !s.Lt(im.xs[i], im.xs[j])) {
            Fail(r, "order reflection", {Src("a", im.xs[i]), Src("b", im.xs[j])});
            break;
          }
        }
      }
      break;
    }
    case PropertyKind::kGaloisInsertion:
      CheckAdjointShapes(alpha, gamma, which);
      CheckGalois(alpha, *gamma, budget, r);
      break;
    case PropertyKind::kAbstraction: {
      CheckAdjointShapes(alpha, gamma, which);
      if (!CheckGalois(alpha, *gamma, budget, r)) break;
      Images im = ImagePool(alpha, budget, 2);
      CheckOps(alpha, im, r, false, ProdRule::kBound, "local correctness");
      break;
    }
    case PropertyKind::kOrderPreserving: {
      CheckAdjointShapes(alpha, gamma, which);
      PropertyReport insertion;
      if (!CheckGalois(alpha, *gamma, budget, insertion)) {
        throw PreconditionError(
            "order_preserving needs a Galois insertion; " + insertion.reason +
            " fails");
      }
      r.evaluated = insertion.evaluated;
      r.exhaustive = insertion.exhaustive;
      CheckOrderPreservation(alpha, budget, r);
      break;
    }
    case PropertyKind::kAggregationCompatible: {
      if (!alpha.source()->is_total() || !alpha.target()->is_total()) {
        throw PreconditionError(
            "aggregation_compatible needs totally ordered semirings");
      }
      Images im = ImagePool(alpha, budget, 2);
      r.exhaustive = im.exhaustive;
      if (CheckMonotone(alpha, im, r) && CheckEndpoints(alpha, r)) {
        CheckAggregation(alpha, budget, r);
      }
      break;
    }
  }
  return Finish(std::move(r));
}

}  // namespace

PropertyReport CheckProperty(const Mapping& alpha, PropertyKind which,
                             const Mapping* gamma, const Budget& budget) {
  const bool set_quantified = which == PropertyKind::kOrderPreserving ||
                              which == PropertyKind::kAggregationCompatible;
  const std::size_t key = set_quantified ? budget.set_size : 0;
  const bool cacheable = !RequiresAdjoint(which);
  if (cacheable) {
    if (auto hit = alpha.Cached(which, key)) return *hit;
  }
  PropertyReport r = Run(alpha, which, gamma, budget);
  if (cacheable && r.exhaustive) alpha.Remember(which, key, r);
  return r;
}

PropertyReport CheckSumOfProducts(const Mapping& alpha, std::size_t m,
                                  std::size_t n, const Budget& budget) {
  if (m == 0 || n == 0) {
    throw PreconditionError("matrix dimensions must be positive");
  }
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  PropertyReport r;
  r.property = "sum_of_products";
  r.note = "n=" + std::to_string(n) + " m=" + std::to_string(m);

  CarrierPool pool = MakePool(s, budget, 1, budget.set_pool);
  r.exhaustive = pool.exhaustive;
  std::vector<Achieved> base = Singletons(alpha, pool.values);
  bool truncated = false;

  std::vector<Achieved> rows = base;
  {
    PairSet dedup;
    for (auto& a : base) dedup.Insert(a);
    rows = dedup.items();
  }
  for (std::size_t j = 1; j < m && !truncated; ++j) {
    rows = Extend(
               rows, base, [&](auto& a, auto& b) { return s.Prod(a, b); },
               [&](auto& a, auto& b) { return t.Prod(a, b); }, r, truncated)
               .items();
  }
  std::vector<Achieved> sums = rows;
  for (std::size_t i = 1; i < n && !truncated; ++i) {
    sums = Extend(
               sums, rows, [&](auto& a, auto& b) { return s.Sum(a, b); },
               [&](auto& a, auto& b) { return t.Sum(a, b); }, r, truncated)
               .items();
  }
  if (truncated) r.exhaustive = false;

  for (const auto& p : sums) {
    for (const auto& q : sums) {
      ++r.evaluated;
      if (t.Lt(p.abs, q.abs) && !s.Lt(p.conc, q.conc)) {
        std::vector<WitnessEntry> w;
        for (std::size_t k = 0; k < p.rep.size(); ++k) {
          w.push_back(Src("U[" + std::to_string(k / m) + "][" +
                              std::to_string(k % m) + "]",
                          p.rep[k]));
        }
        for (std::size_t k = 0; k < q.rep.size(); ++k) {
          w.push_back(Src("V[" + std::to_string(k / m) + "][" +
                              std::to_string(k % m) + "]",
                          q.rep[k]));
        }
        Fail(r, "strict order transfer", std::move(w));
        return r;
      }
    }
  }
  return Finish(std::move(r));
}

namespace {

// Row-major matrix from "U[i][j]" labels; columns inferred from labels.
std::vector<std::vector<Value>> Matrix(const PropertyReport& r, char name) {
  std::vector<std::vector<Value>> rows;
  for (const auto& w : r.witness) {
    if (w.label.empty() || w.label[0] != name) continue;
    std::size_t i = std::stoul(w.label.substr(2));
    std::size_t j = std::stoul(w.label.substr(w.label.find("][") + 2));
    if (rows.size() <= i) rows.resize(i + 1);
    if (rows[i].size() <= j) rows[i].resize(j + 1);
    rows[i][j] = w.value;
  }
  return rows;
}

}  // namespace

bool ConfirmViolation(const Mapping& alpha, const PropertyReport& report,
                      const Mapping* gamma) {
  if (report.verdict != Verdict::kFail) return false;
  const Semiring& s = *alpha.source();
  const Semiring& t = *alpha.target();
  const Value* a = report.Find("a");
  const Value* b = report.Find("b");
  const Value* y = report.Find("y");
  const Value* z = report.Find("z");
  const std::string& why = report.reason;

  auto product = [](const Semiring& sr, const std::vector<Value>& xs) {
    Value acc = sr.one();
    for (const Value& x : xs) acc = sr.Prod(acc, x);
    return acc;
  };
  auto mapped = [&](const std::vector<Value>& xs) {
    std::vector<Value> out;
    for (const Value& x : xs) out.push_back(alpha.Apply(x));
    return out;
  };

  if (why == "zero") return alpha.Apply(s.zero()) != t.zero();
  if (why == "one") return alpha.Apply(s.one()) != t.one();
  if (why == "monotonicity" || why == "lower monotonicity") {
    return a && b && s.Leq(*a, *b) && !t.Leq(alpha.Apply(*a), alpha.Apply(*b));
  }
  if (why == "upper monotonicity") {
    return gamma && y && z && t.Leq(*y, *z) &&
           !s.Leq(gamma->Apply(*y), gamma->Apply(*z));
  }
  if (why == "sum") {
    return a && b &&
           alpha.Apply(s.Sum(*a, *b)) !=
               t.Sum(alpha.Apply(*a), alpha.Apply(*b));
  }
  if (why == "product") {
    return a && b &&
           alpha.Apply(s.Prod(*a, *b)) !=
               t.Prod(alpha.Apply(*a), alpha.Apply(*b));
  }
  if (why == "product bound" || why == "local correctness") {
    return a && b &&
           !t.Leq(alpha.Apply(s.Prod(*a, *b)),
                  t.Prod(alpha.Apply(*a), alpha.Apply(*b)));
  }
  if (why == "order reflection") {
    return a && b && t.Lt(alpha.Apply(*a), alpha.Apply(*b)) && !s.Lt(*a, *b);
  }
  if (why == "injectivity") {
    return a && b && *a != *b && alpha.Apply(*a) == alpha.Apply(*b);
  }
  if (why == "surjectivity") {
    if (!y || !s.is_finite()) return false;
    for (const Value& x : s.Elements()) {
      if (alpha.Apply(x) == *y) return false;
    }
    return true;
  }
  if (why == "adjunction") {
    return gamma && a && y &&
           t.Leq(alpha.Apply(*a), *y) != s.Leq(*a, gamma->Apply(*y));
  }
  if (why == "insertion") {
    return gamma && y && alpha.Apply(gamma->Apply(*y)) != *y;
  }
  if (why == "order preservation" || why == "aggregation") {
    std::vector<Value> i1 = report.Collect("I1[");
    std::vector<Value> i2 = report.Collect("I2[");
    if (i1.empty() || i2.empty()) return false;
    Value c1 = product(s, i1), c2 = product(s, i2);
    Value a1 = product(t, mapped(i1)), a2 = product(t, mapped(i2));
    if (why == "order preservation") {
      return t.Leq(a1, a2) && !s.Leq(c1, c2);
    }
    return t.Leq(alpha.Apply(c1), alpha.Apply(c2)) && !t.Leq(a1, a2);
  }
  if (why == "strict order transfer") {
    auto u = Matrix(report, 'U');
    auto v = Matrix(report, 'V');
    if (u.empty() || u.size() != v.size()) return false;
    Value cu = s.zero(), cv = s.zero(), au = t.zero(), av = t.zero();
    for (std::size_t i = 0; i < u.size(); ++i) {
      cu = s.Sum(cu, product(s, u[i]));
      cv = s.Sum(cv, product(s, v[i]));
      au = t.Sum(au, product(t, mapped(u[i])));
      av = t.Sum(av, product(t, mapped(v[i])));
    }
    return t.Lt(au, av) && !s.Lt(cu, cv);
  }
  return false;
}

}  // namespace softabs
