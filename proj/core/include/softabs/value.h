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

#ifndef SOFTABS_VALUE_H_
#define SOFTABS_VALUE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "softabs/rational.h"

namespace softabs {

// A nonnegative rational or +infinity. Carrier of the weighted semiring.
struct Weight {
  bool infinite = false;
  Rational finite;  // meaningful only when !infinite

  static Weight Infinity() { return Weight{true, Rational()}; }
  static Weight Of(Rational r) { return Weight{false, std::move(r)}; }

  std::string ToString() const {
    return infinite ? "inf" : finite.ToString();
  }
  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.finite == b.finite;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    if (a.infinite || b.infinite) return a.infinite <=> b.infinite;
    return a.finite <=> b.finite;
  }
};

// Subset of a declared universe of at most 64 names, one bit per name.
struct Subset {
  std::uint64_t bits = 0;
  friend auto operator<=>(const Subset&, const Subset&) = default;
};

// Index into an enumerated carrier (table and quotient semirings).
struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// An element of some semiring carrier. Which alternative is active depends on
// the owning semiring: bool for boolean, Rational for fuzzy and probabilistic,
// Weight for weighted, Subset for powerset, Element for table semirings and
// a tuple of components for products. Equality is structural and exact.
class Value {
 public:
  using Tuple = std::vector<Value>;
  enum class Kind { kBool, kRational, kWeight, kSubset, kElement, kTuple };

  Value() = default;
  static Value Bool(bool b) { return Value(Storage(std::in_place_index<0>, b)); }
  static Value Unit(Rational r) {
    return Value(Storage(std::in_place_index<1>, std::move(r)));
  }
  static Value Weighted(Weight w) {
    return Value(Storage(std::in_place_index<2>, std::move(w)));
  }
  static Value Set(std::uint64_t bits) {
    return Value(Storage(std::in_place_index<3>, Subset{bits}));
  }
  static Value Elem(std::uint32_t index) {
    return Value(Storage(std::in_place_index<4>, Element{index}));
  }
  static Value Components(Tuple parts) {
    return Value(Storage(std::in_place_index<5>, std::move(parts)));
  }

  Kind kind() const { return static_cast<Kind>(data_.index()); }

  bool as_bool() const { return std::get<0>(data_); }
  const Rational& as_rational() const { return std::get<1>(data_); }
  const Weight& as_weight() const { return std::get<2>(data_); }
  std::uint64_t as_bits() const { return std::get<3>(data_).bits; }
  std::uint32_t as_index() const { return std::get<4>(data_).index; }
  const Tuple& as_tuple() const { return std::get<5>(data_); }

  // Structural rendering for diagnostics; semirings provide the named form.
  std::string DebugString() const;
  std::size_t Hash() const;

  friend bool operator==(const Value& a, const Value& b);
  // Arbitrary but fixed total order, used for canonical containers only. It
  // is unrelated to any semiring's induced order.
  friend std::strong_ordering operator<=>(const Value& a, const Value& b);

 private:
  using Storage =
      std::variant<bool, Rational, Weight, Subset, Element, Tuple>;
  explicit Value(Storage s) : data_(std::move(s)) {}

  Storage data_;
};

struct ValueHash {
  std::size_t operator()(const Value& v) const { return v.Hash(); }
};

}  // namespace softabs

#endif  // SOFTABS_VALUE_H_
