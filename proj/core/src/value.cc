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

#include "softabs/value.h"

#include <functional>

namespace softabs {

std::string Value::DebugString() const {
  switch (kind()) {
    case Kind::kBool:
      return as_bool() ? "T" : "F";
    case Kind::kRational:
      return as_rational().ToString();
    case Kind::kWeight:
      return as_weight().ToString();
    case Kind::kSubset:
      return "#" + std::to_string(as_bits());
    case Kind::kElement:
      return "@" + std::to_string(as_index());
    case Kind::kTuple: {
      std::string out = "(";
      const Tuple& t = as_tuple();
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += t[i].DebugString();
      }
      return out + ")";
    }
  }
  return "?";
}

std::size_t Value::Hash() const {
  std::size_t seed = data_.index() * 0x9E3779B97F4A7C15ull;
  auto mix = [&seed](std::size_t h) {
    seed ^= h + 0x9E3779B97F4A7C15ull + (seed << 6) + (seed >> 2);
  };
  switch (kind()) {
    case Kind::kBool:
      mix(as_bool());
      break;
    case Kind::kRational:
      mix(as_rational().Hash());
      break;
    case Kind::kWeight:
      mix(as_weight().infinite ? 0xFFFFu : as_weight().finite.Hash());
      break;
    case Kind::kSubset:
      mix(std::hash<std::uint64_t>{}(as_bits()));
      break;
    case Kind::kElement:
      mix(as_index());
      break;
    case Kind::kTuple:
      for (const Value& v : as_tuple()) mix(v.Hash());
      break;
  }
  return seed;
}

bool operator==(const Value& a, const Value& b) { return a.data_ == b.data_; }

std::strong_ordering operator<=>(const Value& a, const Value& b) {
  if (a.data_.index() != b.data_.index()) {
    return a.data_.index() <=> b.data_.index();
  }
  switch (a.kind()) {
    case Value::Kind::kBool:
      return a.as_bool() <=> b.as_bool();
    case Value::Kind::kRational:
      return a.as_rational() <=> b.as_rational();
    case Value::Kind::kWeight:
      return a.as_weight() <=> b.as_weight();
    case Value::Kind::kSubset:
      return a.as_bits() <=> b.as_bits();
    case Value::Kind::kElement:
      return a.as_index() <=> b.as_index();
    case Value::Kind::kTuple: {
      const auto& x = a.as_tuple();
      const auto& y = b.as_tuple();
      for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
        if (auto c = x[i] <=> y[i]; c != 0) return c;
      }
      return x.size() <=> y.size();
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace softabs
