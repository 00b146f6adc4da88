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
//
// Exact rational numbers. Values that fit in a pair of 64-bit integers are
// kept inline; anything larger is promoted to an arbitrary-precision
// representation, so no operation ever rounds or overflows.

#ifndef SOFTABS_RATIONAL_H_
#define SOFTABS_RATIONAL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace softabs {

class Rational {
 public:
  Rational() = default;
  // NOLINTNEXTLINE(google-explicit-constructor)
  Rational(std::int64_t integer) : num_(integer) {}
  // Throws std::domain_error when `den` is zero.
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "p/q", "p", and plain decimals such as "0.49" or "-2.5".
  // Throws std::invalid_argument on malformed text.
  static Rational Parse(std::string_view text);

  // Lowest terms; integers are printed without a denominator.
  std::string ToString() const;

  bool is_small() const { return big_ == nullptr; }
  int sign() const;
  bool is_integer() const;
  std::size_t Hash() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  // Throws std::domain_error on division by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  struct BigRep;

 private:
  explicit Rational(std::shared_ptr<const BigRep> big);
  static Rational FromBig(const BigRep& rep);
  static Rational Normalized(__int128 num, __int128 den);
  BigRep ToBig() const;

  // Invariant when small: den_ > 0 and gcd(|num_|, den_) == 1.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  // Non-null only when the value does not fit the inline representation.
  std::shared_ptr<const BigRep> big_;
};

inline Rational Min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline Rational Max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace softabs

#endif  // SOFTABS_RATIONAL_H_
