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

#include "softabs/semiring.h"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_map>
#include <utility>

#include "softabs/errors.h"

namespace softabs {

using nlohmann::json;

std::string_view KindName(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::kBoolean:
      return "boolean";
    case SemiringKind::kFuzzy:
      return "fuzzy";
    case SemiringKind::kProbabilistic:
      return "probabilistic";
    case SemiringKind::kWeighted:
      return "weighted";
    case SemiringKind::kPowerset:
      return "powerset";
    case SemiringKind::kTable:
      return "table";
    case SemiringKind::kProduct:
      return "product";
  }
  return "?";
}

// ----- Semiring base -----

void Semiring::Finalize(Value zero, Value one, bool finite, std::size_t size) {
  zero_ = std::move(zero);
  one_ = std::move(one);
  finite_ = finite;
  size_ = size;
  if (finite_ && size_ <= kMaxTabulatedCarrier) {
    auto t = std::make_unique<FiniteTables>();
    t->size = size_;
    std::vector<Value> elems;
    elems.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) elems.push_back(DoElementAt(i));
    t->sum.resize(size_ * size_);
    t->prod.resize(size_ * size_);
    t->leq.resize(size_ * size_);
    for (std::size_t i = 0; i < size_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        auto s = static_cast<std::uint32_t>(DoIndexOf(DoSum(elems[i], elems[j])));
        t->sum[i * size_ + j] = s;
        t->prod[i * size_ + j] =
            static_cast<std::uint32_t>(DoIndexOf(DoProd(elems[i], elems[j])));
        t->leq[i * size_ + j] = s == j;
      }
    }
    t->zero = static_cast<std::uint32_t>(DoIndexOf(zero_));
    t->one = static_cast<std::uint32_t>(DoIndexOf(one_));
    total_ = true;
    for (std::size_t i = 0; i < size_ && total_; ++i) {
      for (std::size_t j = 0; j < size_; ++j) {
        if (!t->leq[i * size_ + j] && !t->leq[j * size_ + i]) {
          total_ = false;
          break;
        }
      }
    }
    tables_ = std::move(t);
  } else {
    total_ = ComputeTotal();
  }
}

void Semiring::CheckShape(const Value& v) const {
  if (!ShapeMatches(v)) {
    throw TypeMismatch("value " + v.DebugString() + " is not in carrier of " +
                       Name());
  }
}

Value Semiring::Sum(const Value& a, const Value& b) const {
  CheckShape(a);
  CheckShape(b);
  return DoSum(a, b);
}

Value Semiring::Prod(const Value& a, const Value& b) const {
  CheckShape(a);
  CheckShape(b);
  return DoProd(a, b);
}

bool Semiring::Leq(const Value& a, const Value& b) const {
  CheckShape(a);
  CheckShape(b);
  if (tables_) {
    return tables_->Leq(static_cast<std::uint32_t>(DoIndexOf(a)),
                        static_cast<std::uint32_t>(DoIndexOf(b)));
  }
  return DoSum(a, b) == b;
}

bool Semiring::Lt(const Value& a, const Value& b) const {
  return a != b && Leq(a, b);
}

bool Semiring::Contains(const Value& v) const {
  return ShapeMatches(v) && DoContains(v);
}

void Semiring::CheckMember(const Value& v) const {
  if (!Contains(v)) {
    throw TypeMismatch("value " + v.DebugString() + " is not in carrier of " +
                       Name());
  }
}

std::size_t Semiring::size() const {
  if (!finite_) throw PreconditionError(Name() + " has an infinite carrier");
  return size_;
}

std::size_t Semiring::IndexOf(const Value& v) const {
  if (!finite_) throw PreconditionError(Name() + " has an infinite carrier");
  CheckMember(v);
  return DoIndexOf(v);
}

Value Semiring::ElementAt(std::size_t index) const {
  if (!finite_) throw PreconditionError(Name() + " has an infinite carrier");
  if (index >= size_) throw PreconditionError("element index out of range");
  return DoElementAt(index);
}

std::vector<Value> Semiring::Elements(std::size_t limit) const {
  if (!finite_) throw PreconditionError(Name() + " has an infinite carrier");
  if (size_ > limit) {
    throw PreconditionError(Name() + " carrier exceeds enumeration limit");
  }
  std::vector<Value> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) out.push_back(DoElementAt(i));
  return out;
}

std::size_t Semiring::DoIndexOf(const Value&) const {
  throw PreconditionError(Name() + " is not enumerable");
}

Value Semiring::DoElementAt(std::size_t) const {
  throw PreconditionError(Name() + " is not enumerable");
}

Value Semiring::Sample(Rng& rng) const { return DoSample(rng); }

std::string Semiring::Format(const Value& v) const {
  CheckShape(v);
  return DoFormat(v);
}

json Semiring::ToJson(const Value& v) const {
  CheckShape(v);
  return DoToJson(v);
}

Value Semiring::FromJson(const json& j, const std::string& where) const {
  Value v = DoFromJson(j, where);
  if (!Contains(v)) {
    throw InputError("value " + j.dump() + " is not in carrier of " + Name(),
                     where);
  }
  return v;
}

json Semiring::Descriptor() const { return DoDescriptor(); }

bool Semiring::SameAs(const Semiring& other) const {
  if (this == &other) return true;
  return kind_ == other.kind_ && Descriptor() == other.Descriptor();
}

namespace {

Rational SampleUnitRational(Rng& rng) {
  std::uniform_int_distribution<std::int64_t> den_dist(1, kSampleDenominator);
  std::int64_t den = den_dist(rng);
  std::uniform_int_distribution<std::int64_t> num_dist(0, den);
  return Rational(num_dist(rng), den);
}

Rational ParseRationalJson(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return Rational::Parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) {
      return Rational(static_cast<std::int64_t>(j.get<std::uint64_t>()));
    }
    if (j.is_number_float()) return Rational::Parse(j.dump());
  } catch (const std::exception& e) {
    throw InputError(e.what(), where);
  }
  throw InputError("expected a rational (\"p/q\" string or number), got " +
                       j.dump(),
                   where);
}

std::string Join(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out;
}

// ----- boolean -----

class BooleanSemiring final : public Semiring {
 public:
  BooleanSemiring() : Semiring(SemiringKind::kBoolean) {}
  void Init() { Finalize(Value::Bool(false), Value::Bool(true), true, 2); }
  std::string Name() const override { return "boolean"; }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kBool;
  }
  bool DoContains(const Value&) const override { return true; }
  Value DoSum(const Value& a, const Value& b) const override {
    return Value::Bool(a.as_bool() || b.as_bool());
  }
  Value DoProd(const Value& a, const Value& b) const override {
    return Value::Bool(a.as_bool() && b.as_bool());
  }
  std::size_t DoIndexOf(const Value& v) const override {
    return v.as_bool() ? 1 : 0;
  }
  Value DoElementAt(std::size_t i) const override { return Value::Bool(i == 1); }
  Value DoSample(Rng& rng) const override {
    return Value::Bool(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
  }
  std::string DoFormat(const Value& v) const override {
    return v.as_bool() ? "T" : "F";
  }
  json DoToJson(const Value& v) const override { return v.as_bool(); }
  Value DoFromJson(const json& j, const std::string& where) const override {
    if (j.is_boolean()) return Value::Bool(j.get<bool>());
    if (j.is_string()) {
      const auto& s = j.get_ref<const std::string&>();
      if (s == "T" || s == "true") return Value::Bool(true);
      if (s == "F" || s == "false") return Value::Bool(false);
    }
    throw InputError("expected a boolean, got " + j.dump(), where);
  }
  json DoDescriptor() const override { return {{"kind", "boolean"}}; }
};

// ----- fuzzy and probabilistic share the unit interval -----

class UnitIntervalSemiring final : public Semiring {
 public:
  explicit UnitIntervalSemiring(SemiringKind kind) : Semiring(kind) {}
  void Init() {
    Finalize(Value::Unit(Rational(0)), Value::Unit(Rational(1)), false, 0);
  }
  std::string Name() const override { return std::string(KindName(kind())); }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kRational;
  }
  bool DoContains(const Value& v) const override {
    const Rational& r = v.as_rational();
    return r.sign() >= 0 && r <= Rational(1);
  }
  Value DoSum(const Value& a, const Value& b) const override {
    return a.as_rational() < b.as_rational() ? b : a;
  }
  Value DoProd(const Value& a, const Value& b) const override {
    if (kind() == SemiringKind::kFuzzy) {
      return b.as_rational() < a.as_rational() ? b : a;
    }
    return Value::Unit(a.as_rational() * b.as_rational());
  }
  Value DoSample(Rng& rng) const override {
    return Value::Unit(SampleUnitRational(rng));
  }
  std::string DoFormat(const Value& v) const override {
    return v.as_rational().ToString();
  }
  json DoToJson(const Value& v) const override {
    return v.as_rational().ToString();
  }
  Value DoFromJson(const json& j, const std::string& where) const override {
    return Value::Unit(ParseRationalJson(j, where));
  }
  json DoDescriptor() const override { return {{"kind", KindName(kind())}}; }
};

// ----- weighted: <Q+ u {inf}, min, +, inf, 0> -----

class WeightedSemiring final : public Semiring {
 public:
  WeightedSemiring() : Semiring(SemiringKind::kWeighted) {}
  void Init() {
    Finalize(Value::Weighted(Weight::Infinity()),
             Value::Weighted(Weight::Of(Rational(0))), false, 0);
  }
  std::string Name() const override { return "weighted"; }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kWeight;
  }
  bool DoContains(const Value& v) const override {
    const Weight& w = v.as_weight();
    return w.infinite || w.finite.sign() >= 0;
  }
  Value DoSum(const Value& a, const Value& b) const override {
    return b.as_weight() < a.as_weight() ? b : a;
  }
  Value DoProd(const Value& a, const Value& b) const override {
    const Weight& x = a.as_weight();
    const Weight& y = b.as_weight();
    if (x.infinite) return a;
    if (y.infinite) return b;
    if (y.finite.sign() == 0) return a;
    if (x.finite.sign() == 0) return b;
    return Value::Weighted(Weight::Of(x.finite + y.finite));
  }
  Value DoSample(Rng& rng) const override {
    if (std::uniform_int_distribution<int>(0, 15)(rng) == 0) {
      return Value::Weighted(Weight::Infinity());
    }
    std::uniform_int_distribution<std::int64_t> den_dist(1, kSampleDenominator);
    std::int64_t den = den_dist(rng);
    std::uniform_int_distribution<std::int64_t> num_dist(0, 100 * den);
    return Value::Weighted(Weight::Of(Rational(num_dist(rng), den)));
  }
  std::string DoFormat(const Value& v) const override {
    return v.as_weight().ToString();
  }
  json DoToJson(const Value& v) const override {
    return v.as_weight().ToString();
  }
  Value DoFromJson(const json& j, const std::string& where) const override {
    if (j.is_string()) {
      const auto& s = j.get_ref<const std::string&>();
      if (s == "inf" || s == "+inf" || s == "infinity") {
        return Value::Weighted(Weight::Infinity());
      }
    }
    return Value::Weighted(Weight::Of(ParseRationalJson(j, where)));
  }
  json DoDescriptor() const override { return {{"kind", "weighted"}}; }
};

// ----- powerset over a named universe -----

class PowersetSemiring final : public Semiring {
 public:
  explicit PowersetSemiring(std::vector<std::string> universe)
      : Semiring(SemiringKind::kPowerset), universe_(std::move(universe)) {
    mask_ = universe_.size() == 64 ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << universe_.size()) - 1;
  }
  void Init() {
    std::size_t size = universe_.size() >= 63
                           ? std::numeric_limits<std::size_t>::max()
                           : std::size_t{1} << universe_.size();
    Finalize(Value::Set(0), Value::Set(mask_), true, size);
  }
  std::string Name() const override {
    return "powerset{" + Join(universe_) + "}";
  }
  const std::vector<std::string>& universe() const { return universe_; }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kSubset;
  }
  bool DoContains(const Value& v) const override {
    return (v.as_bits() & ~mask_) == 0;
  }
  Value DoSum(const Value& a, const Value& b) const override {
    return Value::Set(a.as_bits() | b.as_bits());
  }
  Value DoProd(const Value& a, const Value& b) const override {
    return Value::Set(a.as_bits() & b.as_bits());
  }
  std::size_t DoIndexOf(const Value& v) const override { return v.as_bits(); }
  Value DoElementAt(std::size_t i) const override { return Value::Set(i); }
  Value DoSample(Rng& rng) const override {
    return Value::Set(rng() & mask_);
  }
  std::string DoFormat(const Value& v) const override {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (v.as_bits() >> i & 1) {
        if (!first) out += ",";
        out += universe_[i];
        first = false;
      }
    }
    return out + "}";
  }
  json DoToJson(const Value& v) const override {
    json out = json::array();
    for (std::size_t i = 0; i < universe_.size(); ++i) {
      if (v.as_bits() >> i & 1) out.push_back(universe_[i]);
    }
    return out;
  }
  Value DoFromJson(const json& j, const std::string& where) const override {
    if (!j.is_array()) {
      throw InputError("expected an array of universe names, got " + j.dump(),
                       where);
    }
    std::uint64_t bits = 0;
    for (std::size_t k = 0; k < j.size(); ++k) {
      const std::string loc = where + "/" + std::to_string(k);
      if (!j[k].is_string()) throw InputError("expected a name", loc);
      auto it = std::find(universe_.begin(), universe_.end(),
                          j[k].get<std::string>());
      if (it == universe_.end()) {
        throw InputError("unknown universe name " + j[k].dump(), loc);
      }
      bits |= std::uint64_t{1} << (it - universe_.begin());
    }
    return Value::Set(bits);
  }
  json DoDescriptor() const override {
    return {{"kind", "powerset"}, {"universe", universe_}};
  }
  bool ComputeTotal() const override { return universe_.size() <= 1; }

 private:
  std::vector<std::string> universe_;
  std::uint64_t mask_;
};

// ----- explicit finite tables -----

class TableSemiring final : public Semiring {
 public:
  TableSemiring(std::vector<std::string> names, std::vector<std::uint32_t> sum,
                std::vector<std::uint32_t> prod, std::uint32_t zero,
                std::uint32_t one)
      : Semiring(SemiringKind::kTable),
        names_(std::move(names)),
        sum_(std::move(sum)),
        prod_(std::move(prod)),
        zero_index_(zero),
        one_index_(one) {}
  void Init() {
    Finalize(Value::Elem(zero_index_), Value::Elem(one_index_), true,
             names_.size());
  }
  std::string Name() const override { return "table{" + Join(names_) + "}"; }
  const std::vector<std::string>& names() const { return names_; }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kElement;
  }
  bool DoContains(const Value& v) const override {
    return v.as_index() < names_.size();
  }
  Value DoSum(const Value& a, const Value& b) const override {
    return Value::Elem(sum_[a.as_index() * names_.size() + b.as_index()]);
  }
  Value DoProd(const Value& a, const Value& b) const override {
    return Value::Elem(prod_[a.as_index() * names_.size() + b.as_index()]);
  }
  std::size_t DoIndexOf(const Value& v) const override { return v.as_index(); }
  Value DoElementAt(std::size_t i) const override {
    return Value::Elem(static_cast<std::uint32_t>(i));
  }
  Value DoSample(Rng& rng) const override {
    return Value::Elem(static_cast<std::uint32_t>(
        std::uniform_int_distribution<std::size_t>(0, names_.size() - 1)(rng)));
  }
  std::string DoFormat(const Value& v) const override {
    return v.as_index() < names_.size() ? names_[v.as_index()]
                                        : "@" + std::to_string(v.as_index());
  }
  json DoToJson(const Value& v) const override { return DoFormat(v); }
  Value DoFromJson(const json& j, const std::string& where) const override {
    if (j.is_string()) {
      auto it = std::find(names_.begin(), names_.end(), j.get<std::string>());
      if (it != names_.end()) {
        return Value::Elem(static_cast<std::uint32_t>(it - names_.begin()));
      }
    }
    throw InputError("unknown element " + j.dump(), where);
  }
  json DoDescriptor() const override {
    json sum = json::array(), prod = json::array();
    const std::size_t n = names_.size();
    for (std::size_t i = 0; i < n; ++i) {
      json srow = json::array(), prow = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        srow.push_back(names_[sum_[i * n + k]]);
        prow.push_back(names_[prod_[i * n + k]]);
      }
      sum.push_back(std::move(srow));
      prod.push_back(std::move(prow));
    }
    return {{"kind", "table"},          {"elements", names_},
            {"sum", std::move(sum)},    {"prod", std::move(prod)},
            {"zero", names_[zero_index_]}, {"one", names_[one_index_]}};
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint32_t> sum_;
  std::vector<std::uint32_t> prod_;
  std::uint32_t zero_index_;
  std::uint32_t one_index_;
};

// ----- componentwise product -----

class ProductSemiring final : public Semiring {
 public:
  explicit ProductSemiring(std::vector<SemiringPtr> factors)
      : Semiring(SemiringKind::kProduct), factors_(std::move(factors)) {}
  void Init() {
    Value::Tuple zero, one;
    bool finite = true;
    std::size_t size = 1;
    for (const auto& f : factors_) {
      zero.push_back(f->zero());
      one.push_back(f->one());
      if (!f->is_finite()) {
        finite = false;
        continue;
      }
      std::size_t fs = f->size();
      if (fs != 0 && size > std::numeric_limits<std::size_t>::max() / fs) {
        size = std::numeric_limits<std::size_t>::max();
      } else {
        size *= fs;
      }
    }
    Finalize(Value::Components(std::move(zero)),
             Value::Components(std::move(one)), finite, finite ? size : 0);
  }
  std::string Name() const override {
    std::string out = "product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->Name();
    }
    return out + ")";
  }
  const std::vector<SemiringPtr>& factors() const { return factors_; }

 protected:
  bool ShapeMatches(const Value& v) const override {
    return v.kind() == Value::Kind::kTuple &&
           v.as_tuple().size() == factors_.size();
  }
  bool DoContains(const Value& v) const override {
    const auto& t = v.as_tuple();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (!factors_[i]->Contains(t[i])) return false;
    }
    return true;
  }
  Value DoSum(const Value& a, const Value& b) const override {
    Value::Tuple out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out.push_back(factors_[i]->Sum(a.as_tuple()[i], b.as_tuple()[i]));
    }
    return Value::Components(std::move(out));
  }
  Value DoProd(const Value& a, const Value& b) const override {
    Value::Tuple out;
    out.reserve(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out.push_back(factors_[i]->Prod(a.as_tuple()[i], b.as_tuple()[i]));
    }
    return Value::Components(std::move(out));
  }
  std::size_t DoIndexOf(const Value& v) const override {
    std::size_t index = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      index = index * factors_[i]->size() + factors_[i]->IndexOf(v.as_tuple()[i]);
    }
    return index;
  }
  Value DoElementAt(std::size_t index) const override {
    Value::Tuple out(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
      std::size_t fs = factors_[i]->size();
      out[i] = factors_[i]->ElementAt(index % fs);
      index /= fs;
    }
    return Value::Components(std::move(out));
  }
  Value DoSample(Rng& rng) const override {
    Value::Tuple out;
    for (const auto& f : factors_) out.push_back(f->Sample(rng));
    return Value::Components(std::move(out));
  }
  std::string DoFormat(const Value& v) const override {
    std::string out = "(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->Format(v.as_tuple()[i]);
    }
    return out + ")";
  }
  json DoToJson(const Value& v) const override {
    json out = json::array();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out.push_back(factors_[i]->ToJson(v.as_tuple()[i]));
    }
    return out;
  }
  Value DoFromJson(const json& j, const std::string& where) const override {
    if (!j.is_array() || j.size() != factors_.size()) {
      throw InputError("expected an array of " +
                           std::to_string(factors_.size()) + " components",
                       where);
    }
    Value::Tuple out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      out.push_back(
          factors_[i]->FromJson(j[i], where + "/" + std::to_string(i)));
    }
    return Value::Components(std::move(out));
  }
  json DoDescriptor() const override {
    json fs = json::array();
    for (const auto& f : factors_) fs.push_back(f->Descriptor());
    return {{"kind", "product"}, {"factors", std::move(fs)}};
  }
  bool ComputeTotal() const override {
    int nontrivial = 0;
    for (const auto& f : factors_) {
      if (f->is_finite() && f->size() == 1) continue;
      if (!f->is_total()) return false;
      ++nontrivial;
    }
    return nontrivial <= 1;
  }

 private:
  std::vector<SemiringPtr> factors_;
};

template <class T, class... Args>
std::shared_ptr<const T> Build(Args&&... args) {
  auto s = std::make_shared<T>(std::forward<Args>(args)...);
  s->Init();
  return s;
}

void CheckNames(const std::vector<std::string>& names, const std::string& what,
                const std::string& where) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) {
      throw InputError(what + " names must be nonempty",
                       where + "/" + std::to_string(i));
    }
    if (!seen.insert(names[i]).second) {
      throw InputError("duplicate " + what + " name '" + names[i] + "'",
                       where + "/" + std::to_string(i));
    }
  }
}

}  // namespace

SemiringPtr MakeBoolean() {
  static const SemiringPtr instance = Build<BooleanSemiring>();
  return instance;
}

SemiringPtr MakeFuzzy() {
  static const SemiringPtr instance =
      Build<UnitIntervalSemiring>(SemiringKind::kFuzzy);
  return instance;
}

SemiringPtr MakeProbabilistic() {
  static const SemiringPtr instance =
      Build<UnitIntervalSemiring>(SemiringKind::kProbabilistic);
  return instance;
}

SemiringPtr MakeWeighted() {
  static const SemiringPtr instance = Build<WeightedSemiring>();
  return instance;
}

SemiringPtr MakePowerset(std::vector<std::string> universe) {
  if (universe.empty()) throw InputError("powerset universe is empty");
  if (universe.size() > 64) {
    throw InputError("powerset universe has more than 64 names");
  }
  CheckNames(universe, "universe", "");
  return Build<PowersetSemiring>(std::move(universe));
}

SemiringPtr MakeTable(std::vector<std::string> elements,
                      std::vector<std::uint32_t> sum,
                      std::vector<std::uint32_t> prod, std::uint32_t zero,
                      std::uint32_t one) {
  const std::size_t n = elements.size();
  if (n == 0) throw InputError("table semiring has no elements");
  CheckNames(elements, "element", "");
  if (sum.size() != n * n || prod.size() != n * n) {
    throw InputError("operation tables must be " + std::to_string(n) + "x" +
                     std::to_string(n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (sum[i] >= n || prod[i] >= n) {
      throw InputError("operation table entry out of range");
    }
  }
  if (zero >= n || one >= n) throw InputError("zero/one out of range");
  return Build<TableSemiring>(std::move(elements), std::move(sum),
                              std::move(prod), zero, one);
}

SemiringPtr MakeTable(std::vector<std::string> elements,
                      const std::vector<std::vector<std::string>>& sum,
                      const std::vector<std::vector<std::string>>& prod,
                      const std::string& zero, const std::string& one) {
  const std::size_t n = elements.size();
  if (n == 0) throw InputError("table semiring has no elements", "/elements");
  CheckNames(elements, "element", "/elements");
  std::unordered_map<std::string, std::uint32_t> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[elements[i]] = static_cast<std::uint32_t>(i);
  }
  auto lookup = [&](const std::string& name, const std::string& where) {
    auto it = index.find(name);
    if (it == index.end()) {
      throw InputError("unknown element '" + name + "'", where);
    }
    return it->second;
  };
  auto flatten = [&](const std::vector<std::vector<std::string>>& table,
                     const std::string& which) {
    if (table.size() != n) {
      throw InputError("table must have " + std::to_string(n) + " rows",
                       "/" + which);
    }
    std::vector<std::uint32_t> out;
    out.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw InputError("row must have " + std::to_string(n) + " entries",
                         "/" + which + "/" + std::to_string(i));
      }
      for (std::size_t k = 0; k < n; ++k) {
        out.push_back(lookup(table[i][k], "/" + which + "/" +
                                              std::to_string(i) + "/" +
                                              std::to_string(k)));
      }
    }
    return out;
  };
  auto s = flatten(sum, "sum");
  auto p = flatten(prod, "prod");
  std::uint32_t z = lookup(zero, "/zero");
  std::uint32_t o = lookup(one, "/one");
  return Build<TableSemiring>(std::move(elements), std::move(s), std::move(p),
                              z, o);
}

SemiringPtr MakeProduct(std::vector<SemiringPtr> factors) {
  if (factors.empty()) throw InputError("product has no factors");
  for (const auto& f : factors) {
    if (!f) throw InputError("null product factor");
  }
  return Build<ProductSemiring>(std::move(factors));
}

namespace {

std::vector<std::string> NameList(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("expected an array of names", where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw InputError("expected a name", where + "/" + std::to_string(i));
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> NameMatrix(const json& j,
                                                 const std::string& where) {
  if (!j.is_array()) throw InputError("expected an array of rows", where);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(NameList(j[i], where + "/" + std::to_string(i)));
  }
  return out;
}

const json& Field(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(std::string("missing field '") + key + "'", where);
  }
  return *it;
}

}  // namespace

SemiringPtr MakeBuiltin(const json& descriptor, const std::string& where) {
  json d = descriptor.is_string() ? json{{"kind", descriptor}} : descriptor;
  if (!d.is_object()) throw InputError("expected a semiring descriptor", where);
  const json& kind_field = Field(d, "kind", where);
  if (!kind_field.is_string()) {
    throw InputError("'kind' must be a string", where + "/kind");
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "boolean") return MakeBoolean();
  if (kind == "fuzzy") return MakeFuzzy();
  if (kind == "probabilistic") return MakeProbabilistic();
  if (kind == "weighted") return MakeWeighted();
  if (kind == "powerset") {
    const std::string loc = where + "/universe";
    auto names = NameList(Field(d, "universe", where), loc);
    try {
      return MakePowerset(std::move(names));
    } catch (const InputError& e) {
      throw InputError(e.what(), loc);
    }
  }
  if (kind == "table") {
    auto elements = NameList(Field(d, "elements", where), where + "/elements");
    auto sum = NameMatrix(Field(d, "sum", where), where + "/sum");
    auto prod = NameMatrix(Field(d, "prod", where), where + "/prod");
    const json& zero = Field(d, "zero", where);
    const json& one = Field(d, "one", where);
    if (!zero.is_string()) throw InputError("expected a name", where + "/zero");
    if (!one.is_string()) throw InputError("expected a name", where + "/one");
    try {
      return MakeTable(std::move(elements), sum, prod, zero.get<std::string>(),
                       one.get<std::string>());
    } catch (const InputError& e) {
      // Table errors carry locations relative to the descriptor.
      throw InputError(e.what(), where);
    }
  }
  if (kind == "product") {
    const json& fs = Field(d, "factors", where);
    if (!fs.is_array() || fs.empty()) {
      throw InputError("'factors' must be a nonempty array",
                       where + "/factors");
    }
    std::vector<SemiringPtr> factors;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      factors.push_back(
          MakeBuiltin(fs[i], where + "/factors/" + std::to_string(i)));
    }
    return MakeProduct(std::move(factors));
  }
  throw InputError("unknown semiring kind '" + kind + "'", where + "/kind");
}

const std::vector<std::string>& PowersetUniverse(const Semiring& s) {
  auto* p = dynamic_cast<const PowersetSemiring*>(&s);
  if (!p) throw PreconditionError(s.Name() + " is not a powerset semiring");
  return p->universe();
}

const std::vector<std::string>& TableElementNames(const Semiring& s) {
  auto* p = dynamic_cast<const TableSemiring*>(&s);
  if (!p) throw PreconditionError(s.Name() + " is not a table semiring");
  return p->names();
}

const std::vector<SemiringPtr>& ProductFactors(const Semiring& s) {
  auto* p = dynamic_cast<const ProductSemiring*>(&s);
  if (!p) throw PreconditionError(s.Name() + " is not a product semiring");
  return p->factors();
}

std::vector<std::size_t> MaximalPositions(const Semiring& s,
                                          std::span<const Value> values) {
  if (values.empty()) throw PreconditionError("maximal of an empty multiset");
  // Compare distinct values only; solution tables repeat values heavily.
  std::vector<Value> distinct;
  std::unordered_map<Value, std::size_t, ValueHash> slot;
  std::vector<std::size_t> slot_of(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(values[i], distinct.size());
    if (inserted) distinct.push_back(values[i]);
    slot_of[i] = it->second;
  }
  std::vector<char> is_max(distinct.size(), 1);
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (i != k && s.Leq(distinct[i], distinct[k])) {
        is_max[i] = 0;
        break;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (is_max[slot_of[i]]) out.push_back(i);
  }
  return out;
}

std::vector<Value> Maximal(const Semiring& s, std::span<const Value> values) {
  std::vector<Value> out;
  for (std::size_t i : MaximalPositions(s, values)) {
    if (std::find(out.begin(), out.end(), values[i]) == out.end()) {
      out.push_back(values[i]);
    }
  }
  return out;
}

}  // namespace softabs
