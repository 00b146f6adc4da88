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

#include "softabs/rational.h"

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <limits>
#include <stdexcept>
#include <utility>

namespace softabs {

struct Rational::BigRep {
  boost::multiprecision::cpp_rational value;
};

namespace {

using Int128 = __int128;
using UInt128 = unsigned __int128;
using BigInt = boost::multiprecision::cpp_int;

constexpr std::int64_t kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax64 = std::numeric_limits<std::int64_t>::max();

UInt128 Gcd(UInt128 a, UInt128 b) {
  while (b != 0) {
    UInt128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

UInt128 Abs128(Int128 v) {
  return v < 0 ? UInt128(0) - static_cast<UInt128>(v) : static_cast<UInt128>(v);
}

bool Fits64(Int128 v) { return v >= kMin64 && v <= kMax64; }

BigInt ToBigInt(Int128 v) {
  bool neg = v < 0;
  UInt128 mag = Abs128(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return neg ? BigInt(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = Normalized(num, den);
}

Rational::Rational(std::shared_ptr<const BigRep> big) : big_(std::move(big)) {}

Rational Rational::Normalized(Int128 num, Int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  UInt128 g = Gcd(Abs128(num), static_cast<UInt128>(den));
  if (g > 1) {
    num /= static_cast<Int128>(g);
    den /= static_cast<Int128>(g);
  }
  if (Fits64(num) && Fits64(den)) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  BigRep rep{boost::multiprecision::cpp_rational(ToBigInt(num),
                                                  ToBigInt(den))};
  return FromBig(rep);
}

Rational Rational::FromBig(const BigRep& rep) {
  const BigInt& n = boost::multiprecision::numerator(rep.value);
  const BigInt& d = boost::multiprecision::denominator(rep.value);
  if (n >= kMin64 && n <= kMax64 && d <= kMax64) {
    Rational r;
    r.num_ = n.convert_to<std::int64_t>();
    r.den_ = d.convert_to<std::int64_t>();
    return r;
  }
  return Rational(std::make_shared<const BigRep>(rep));
}

Rational::BigRep Rational::ToBig() const {
  if (big_) return *big_;
  return BigRep{boost::multiprecision::cpp_rational(BigInt(num_),
                                                    BigInt(den_))};
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + std::string(text) +
                                "'");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) fail();
    BigInt v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  };

  std::string_view s = trim(text);
  if (s.empty()) fail();
  BigInt num, den = 1;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = parse_int(s.substr(0, slash));
    den = parse_int(s.substr(slash + 1));
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty()) fail();
    num = parse_int(std::string(s.substr(0, dot)) + std::string(frac));
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (s.substr(0, dot).empty() || s.substr(0, dot) == "-" ||
        s.substr(0, dot) == "+") {
      fail();
    }
  } else {
    num = parse_int(s);
  }
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return FromBig(BigRep{boost::multiprecision::cpp_rational(num, den)});
}

std::string Rational::ToString() const {
  if (big_) {
    const BigInt& n = boost::multiprecision::numerator(big_->value);
    const BigInt& d = boost::multiprecision::denominator(big_->value);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return big_->value.sign();
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return boost::multiprecision::denominator(big_->value) == 1;
  return den_ == 1;
}

std::size_t Rational::Hash() const {
  if (big_) return std::hash<std::string>{}(ToString());
  std::uint64_t h = static_cast<std::uint64_t>(num_) * 0x9E3779B97F4A7C15ull;
  h ^= static_cast<std::uint64_t>(den_) + 0x7F4A7C159E3779B9ull + (h << 6) +
       (h >> 2);
  return static_cast<std::size_t>(h);
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == 1 && b.den_ == 1) {
      std::int64_t sum;
      if (!__builtin_add_overflow(a.num_, b.num_, &sum)) return Rational(sum);
    }
    if (a.den_ == b.den_) {
      return Rational::Normalized(Int128(a.num_) + b.num_, a.den_);
    }
    Int128 num = Int128(a.num_) * b.den_ + Int128(b.num_) * a.den_;
    Int128 den = Int128(a.den_) * b.den_;
    // |num| < 2^127 holds since each product is below 2^126.
    return Rational::Normalized(num, den);
  }
  return Rational::FromBig(
      Rational::BigRep{a.ToBig().value + b.ToBig().value});
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational Rational::operator-() const {
  if (big_) return FromBig(BigRep{-big_->value});
  return Normalized(-Int128(num_), den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    // Cross-reduce first so the products stay small where possible.
    UInt128 g1 = Gcd(Abs128(a.num_), static_cast<UInt128>(b.den_));
    UInt128 g2 = Gcd(Abs128(b.num_), static_cast<UInt128>(a.den_));
    Int128 an = a.num_ / static_cast<Int128>(g1);
    Int128 bd = b.den_ / static_cast<Int128>(g1);
    Int128 bn = b.num_ / static_cast<Int128>(g2);
    Int128 ad = a.den_ / static_cast<Int128>(g2);
    return Rational::Normalized(an * bn, ad * bd);
  }
  return Rational::FromBig(
      Rational::BigRep{a.ToBig().value * b.ToBig().value});
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.sign() == 0) throw std::domain_error("rational division by zero");
  if (a.is_small() && b.is_small()) {
    return a * Rational::Normalized(b.den_, b.num_);
  }
  return Rational::FromBig(
      Rational::BigRep{a.ToBig().value / b.ToBig().value});
}

bool operator==(const Rational& a, const Rational& b) {
  // Both representations are canonical, and a value is big only when it
  // cannot be small.
  if (a.is_small() != b.is_small()) return false;
  if (a.is_small()) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.big_->value == b.big_->value;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.is_small() && b.is_small()) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    Int128 lhs = Int128(a.num_) * b.den_;
    Int128 rhs = Int128(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  auto x = a.ToBig().value;
  auto y = b.ToBig().value;
  if (x < y) return std::strong_ordering::less;
  if (x > y) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace softabs
