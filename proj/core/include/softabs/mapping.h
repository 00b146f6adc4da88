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

#ifndef SOFTABS_MAPPING_H_
#define SOFTABS_MAPPING_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "softabs/report.h"
#include "softabs/semiring.h"

namespace softabs {

enum class MappingKind {
  kTable,
  kIdentity,
  kThreshold,
  kProjection,
  kNatural,
  kCompose,
};

std::string_view MappingKindName(MappingKind kind);

enum class PropertyKind {
  kMonotonic,
  kHomomorphism,
  kQuasiHomomorphism,
  kOrderReflecting,
  kIsomorphism,
  kGaloisInsertion,
  kOrderPreserving,
  kAbstraction,
  kAggregationCompatible,
};

std::string_view PropertyName(PropertyKind kind);
// Accepts the snake_case names ("quasi_homomorphism", ...).
std::optional<PropertyKind> ParsePropertyKind(std::string_view name);
bool RequiresAdjoint(PropertyKind kind);

class Mapping;
using MappingPtr = std::shared_ptr<const Mapping>;

// A total function between the carriers of two semirings. Immutable apart
// from a write-once cache of exhaustive property reports.
class Mapping {
 public:
  virtual ~Mapping() = default;
  Mapping(const Mapping&) = delete;
  Mapping& operator=(const Mapping&) = delete;

  MappingKind kind() const { return kind_; }
  const SemiringPtr& source() const { return source_; }
  const SemiringPtr& target() const { return target_; }

  // Throws TypeMismatch when `a` is outside the source carrier.
  Value Apply(const Value& a) const;

  // alpha(0) = 0~ and alpha(1) = 1~. Every theorem-backed procedure
  // requires this.
  bool PreservesEndpoints() const;

  // Mapping JSON: {"source", "target", "kind", ...kind-specific fields}.
  virtual nlohmann::json Descriptor() const = 0;
  virtual std::string Name() const;

  std::optional<PropertyReport> Cached(PropertyKind kind,
                                       std::size_t set_size) const;
  void Remember(PropertyKind kind, std::size_t set_size,
                const PropertyReport& report) const;

 protected:
  Mapping(MappingKind kind, SemiringPtr source, SemiringPtr target)
      : kind_(kind), source_(std::move(source)), target_(std::move(target)) {}
  virtual Value DoApply(const Value& a) const = 0;
  nlohmann::json BaseDescriptor() const;

 private:
  MappingKind kind_;
  SemiringPtr source_;
  SemiringPtr target_;
  mutable std::mutex cache_mu_;
  mutable std::map<std::pair<PropertyKind, std::size_t>, PropertyReport>
      cache_;
};

// Explicit graph over a finite source. Every source element must appear
// exactly once; throws InputError otherwise.
MappingPtr MakeTableMapping(SemiringPtr source, SemiringPtr target,
                            const std::vector<std::pair<Value, Value>>& pairs);
// images[i] is the image of source element i.
MappingPtr MakeTableMapping(SemiringPtr source, SemiringPtr target,
                            std::vector<Value> images);
MappingPtr MakeIdentity(SemiringPtr s);
// a |-> high if theta <= a in the source order, else low. The source must
// be totally ordered (PreconditionError otherwise).
MappingPtr MakeThreshold(SemiringPtr source, SemiringPtr target, Value theta,
                         Value low, Value high);
// j-th projection out of a product semiring.
MappingPtr MakeProjection(SemiringPtr product, std::size_t j);
// Sends each source element to its block in a quotient table semiring.
MappingPtr MakeNatural(SemiringPtr source, SemiringPtr quotient,
                       std::vector<std::uint32_t> block_of,
                       std::vector<std::vector<Value>> blocks);
// x |-> second(first(x)). Throws InputError unless first's target is the
// same semiring as second's source.
MappingPtr Compose(MappingPtr first, MappingPtr second);

// Images of every source element in index order; finite sources only.
std::vector<Value> Tabulate(const Mapping& m);

// Accessors for parametric kinds.
std::size_t ProjectionIndex(const Mapping& m);
const std::vector<std::vector<Value>>& NaturalBlocks(const Mapping& m);
struct ThresholdParams {
  Value theta, low, high;
};
ThresholdParams ThresholdParameters(const Mapping& m);
std::pair<MappingPtr, MappingPtr> ComposeParts(const Mapping& m);

// A Galois connection <lower, upper>: lower(x) <= y iff x <= upper(y).
struct GaloisPair {
  MappingPtr lower;
  MappingPtr upper;
  // lower o upper = id on the abstract side.
  bool insertion = false;
};

}  // namespace softabs

#endif  // SOFTABS_MAPPING_H_
