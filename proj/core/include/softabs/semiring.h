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
// c-semirings as immutable first-class values.
//
// A c-semiring is <S, +, x, 0, 1> where + is commutative, associative,
// idempotent with unit 0 and absorbing element 1, and x is commutative,
// associative, distributes over +, has unit 1 and absorbing element 0. The
// sum induces the partial order a <= b iff a + b = b, with 0 at the bottom,
// 1 at the top and + as least upper bound.
//
// Built-in carriers:
//   boolean        {F, T}, or, and
//   fuzzy          rationals in [0, 1], max, min
//   probabilistic  rationals in [0, 1], max, *
//   weighted       nonnegative rationals and +inf, min, + (0 is +inf, 1 is 0)
//   powerset(U)    subsets of U, union, intersection
//   table          explicit finite operation tables
//   product        componentwise over a list of factors
//
// The rational subalgebra of the fuzzy semiring is not a complete lattice.
// Nothing here relies on completeness.

#ifndef SOFTABS_SEMIRING_H_
#define SOFTABS_SEMIRING_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "softabs/value.h"

namespace softabs {

enum class SemiringKind {
  kBoolean,
  kFuzzy,
  kProbabilistic,
  kWeighted,
  kPowerset,
  kTable,
  kProduct,
};

std::string_view KindName(SemiringKind kind);

using Rng = std::mt19937_64;

// Carriers up to this size get dense operation tables and a cached order
// matrix at construction.
inline constexpr std::size_t kMaxTabulatedCarrier = 1024;

// Largest denominator used when sampling rationals from infinite carriers.
inline constexpr std::int64_t kSampleDenominator = 64;

// Dense operation tables over element indices, row-major.
struct FiniteTables {
  std::size_t size = 0;
  std::vector<std::uint32_t> sum;
  std::vector<std::uint32_t> prod;
  std::vector<std::uint8_t> leq;
  std::uint32_t zero = 0;
  std::uint32_t one = 0;

  std::uint32_t Sum(std::uint32_t a, std::uint32_t b) const {
    return sum[a * size + b];
  }
  std::uint32_t Prod(std::uint32_t a, std::uint32_t b) const {
    return prod[a * size + b];
  }
  bool Leq(std::uint32_t a, std::uint32_t b) const {
    return leq[a * size + b] != 0;
  }
};

class Semiring;
using SemiringPtr = std::shared_ptr<const Semiring>;

class Semiring {
 public:
  virtual ~Semiring() = default;
  Semiring(const Semiring&) = delete;
  Semiring& operator=(const Semiring&) = delete;

  SemiringKind kind() const { return kind_; }
  // Short human-readable name such as "powerset{a,b}".
  virtual std::string Name() const = 0;

  // Both throw TypeMismatch if an operand has the wrong shape for this
  // carrier.
  Value Sum(const Value& a, const Value& b) const;
  Value Prod(const Value& a, const Value& b) const;
  const Value& zero() const { return zero_; }
  const Value& one() const { return one_; }

  // a <= b iff a + b = b.
  bool Leq(const Value& a, const Value& b) const;
  bool Lt(const Value& a, const Value& b) const;

  // Full membership test, including range invariants.
  bool Contains(const Value& v) const;
  // Throws TypeMismatch unless Contains(v).
  void CheckMember(const Value& v) const;

  bool is_finite() const { return finite_; }
  // Carrier size; throws PreconditionError for infinite carriers.
  // Saturates at SIZE_MAX for finite carriers too large to count.
  std::size_t size() const;
  std::size_t IndexOf(const Value& v) const;
  Value ElementAt(std::size_t index) const;
  // All elements in index order; throws PreconditionError if the carrier is
  // infinite or larger than `limit`.
  std::vector<Value> Elements(std::size_t limit = kMaxTabulatedCarrier) const;
  bool is_total() const { return total_; }
  // Dense tables, or nullptr when the carrier is infinite or too large.
  const FiniteTables* tables() const { return tables_.get(); }

  // Seeded sample from the carrier. Finite carriers sample uniformly.
  Value Sample(Rng& rng) const;

  std::string Format(const Value& v) const;
  nlohmann::json ToJson(const Value& v) const;
  // Throws InputError (with `where` as location) on malformed input.
  Value FromJson(const nlohmann::json& j, const std::string& where = "") const;
  nlohmann::json Descriptor() const;

  // Structural equality of carriers and operations.
  bool SameAs(const Semiring& other) const;

 protected:
  explicit Semiring(SemiringKind kind) : kind_(kind) {}

  // Completes construction: sets endpoints, finiteness, builds tables and
  // totality. Called by every factory.
  void Finalize(Value zero, Value one, bool finite, std::size_t size);

  virtual bool ShapeMatches(const Value& v) const = 0;
  virtual bool DoContains(const Value& v) const = 0;
  virtual Value DoSum(const Value& a, const Value& b) const = 0;
  virtual Value DoProd(const Value& a, const Value& b) const = 0;
  virtual std::size_t DoIndexOf(const Value& v) const;
  virtual Value DoElementAt(std::size_t index) const;
  virtual Value DoSample(Rng& rng) const = 0;
  virtual std::string DoFormat(const Value& v) const = 0;
  virtual nlohmann::json DoToJson(const Value& v) const = 0;
  virtual Value DoFromJson(const nlohmann::json& j,
                           const std::string& where) const = 0;
  virtual nlohmann::json DoDescriptor() const = 0;
  // Only consulted for carriers without tables.
  virtual bool ComputeTotal() const { return true; }

 private:
  void CheckShape(const Value& v) const;

  SemiringKind kind_;
  Value zero_;
  Value one_;
  bool finite_ = false;
  std::size_t size_ = 0;
  bool total_ = true;
  std::unique_ptr<FiniteTables> tables_;
};

SemiringPtr MakeBoolean();
SemiringPtr MakeFuzzy();
SemiringPtr MakeProbabilistic();
SemiringPtr MakeWeighted();
// Throws InputError for an empty universe, duplicate names, or more than 64
// names.
SemiringPtr MakePowerset(std::vector<std::string> universe);
// Throws InputError unless the tables are square over `elements`, every entry
// names an element, and zero/one are elements. Axioms are not checked here;
// use CheckAxioms.
SemiringPtr MakeTable(std::vector<std::string> elements,
                      const std::vector<std::vector<std::string>>& sum,
                      const std::vector<std::vector<std::string>>& prod,
                      const std::string& zero, const std::string& one);
SemiringPtr MakeTable(std::vector<std::string> elements,
                      std::vector<std::uint32_t> sum,
                      std::vector<std::uint32_t> prod, std::uint32_t zero,
                      std::uint32_t one);
// Throws InputError for an empty factor list.
SemiringPtr MakeProduct(std::vector<SemiringPtr> factors);

// Builds any built-in from its JSON descriptor:
//   {"kind": "boolean"|"fuzzy"|"probabilistic"|"weighted"|"powerset"|
//            "table"|"product",
//    "universe": [names], "elements": [names], "sum": [[name]],
//    "prod": [[name]], "zero": name, "one": name, "factors": [descriptors]}
// A bare string is accepted as shorthand for {"kind": string}.
SemiringPtr MakeBuiltin(const nlohmann::json& descriptor,
                        const std::string& where = "");

// Accessors for the parametric kinds.
const std::vector<std::string>& PowersetUniverse(const Semiring& s);
const std::vector<std::string>& TableElementNames(const Semiring& s);
const std::vector<SemiringPtr>& ProductFactors(const Semiring& s);

// Maximal elements of a nonempty multiset: every v such that no w in `values`
// satisfies v < w. Distinct values, in order of first appearance. Throws
// PreconditionError on empty input.
std::vector<Value> Maximal(const Semiring& s, std::span<const Value> values);
// Positions i such that values[i] is maximal, ascending.
std::vector<std::size_t> MaximalPositions(const Semiring& s,
                                          std::span<const Value> values);

}  // namespace softabs

#endif  // SOFTABS_SEMIRING_H_
