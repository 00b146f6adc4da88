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

#include "softabs/mapping.h"

#include "softabs/errors.h"

namespace softabs {

using nlohmann::json;

std::string_view MappingKindName(MappingKind kind) {
  switch (kind) {
    case MappingKind::kTable:
      return "table";
    case MappingKind::kIdentity:
      return "identity";
    case MappingKind::kThreshold:
      return "threshold";
    case MappingKind::kProjection:
      return "projection";
    case MappingKind::kNatural:
      return "natural";
    case MappingKind::kCompose:
      return "compose";
  }
  return "?";
}

namespace {

constexpr std::pair<PropertyKind, std::string_view> kPropertyNames[] = {
    {PropertyKind::kMonotonic, "monotonic"},
    {PropertyKind::kHomomorphism, "homomorphism"},
    {PropertyKind::kQuasiHomomorphism, "quasi_homomorphism"},
    {PropertyKind::kOrderReflecting, "order_reflecting"},
    {PropertyKind::kIsomorphism, "isomorphism"},
    {PropertyKind::kGaloisInsertion, "galois_insertion"},
    {PropertyKind::kOrderPreserving, "order_preserving"},
    {PropertyKind::kAbstraction, "abstraction"},
    {PropertyKind::kAggregationCompatible, "aggregation_compatible"},
};

}  // namespace

std::string_view PropertyName(PropertyKind kind) {
  for (auto& [k, name] : kPropertyNames) {
    if (k == kind) return name;
  }
  return "?";
}

std::optional<PropertyKind> ParsePropertyKind(std::string_view name) {
  for (auto& [k, n] : kPropertyNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

bool RequiresAdjoint(PropertyKind kind) {
  return kind == PropertyKind::kGaloisInsertion ||
         kind == PropertyKind::kOrderPreserving ||
         kind == PropertyKind::kAbstraction;
}

Value Mapping::Apply(const Value& a) const {
  source_->CheckMember(a);
  return DoApply(a);
}

bool Mapping::PreservesEndpoints() const {
  return DoApply(source_->zero()) == target_->zero() &&
         DoApply(source_->one()) == target_->one();
}

std::string Mapping::Name() const {
  return std::string(MappingKindName(kind_)) + ":" + source_->Name() + "->" +
         target_->Name();
}

std::optional<PropertyReport> Mapping::Cached(PropertyKind kind,
                                              std::size_t set_size) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = cache_.find({kind, set_size});
  if (it == cache_.end()) return std::nullopt;
  return it->second;
}

void Mapping::Remember(PropertyKind kind, std::size_t set_size,
                       const PropertyReport& report) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  cache_.try_emplace({kind, set_size}, report);
}

json Mapping::BaseDescriptor() const {
  return {{"kind", MappingKindName(kind_)},
          {"source", source_->Descriptor()},
          {"target", target_->Descriptor()}};
}

namespace {

class TableMapping final : public Mapping {
 public:
  TableMapping(SemiringPtr source, SemiringPtr target,
               std::vector<Value> images)
      : Mapping(MappingKind::kTable, std::move(source), std::move(target)),
        images_(std::move(images)) {}

  json Descriptor() const override {
    json d = BaseDescriptor();
    json pairs = json::array();
    for (std::size_t i = 0; i < images_.size(); ++i) {
      pairs.push_back(json::array({source()->ToJson(source()->ElementAt(i)),
                                   target()->ToJson(images_[i])}));
    }
    d["pairs"] = std::move(pairs);
    return d;
  }

 protected:
  Value DoApply(const Value& a) const override {
    return images_[source()->IndexOf(a)];
  }

 private:
  std::vector<Value> images_;
};

class IdentityMapping final : public Mapping {
 public:
  explicit IdentityMapping(SemiringPtr s)
      : Mapping(MappingKind::kIdentity, s, s) {}
  json Descriptor() const override { return BaseDescriptor(); }

 protected:
  Value DoApply(const Value& a) const override { return a; }
};

class ThresholdMapping final : public Mapping {
 public:
  ThresholdMapping(SemiringPtr source, SemiringPtr target, Value theta,
                   Value low, Value high)
      : Mapping(MappingKind::kThreshold, std::move(source), std::move(target)),
        params_{std::move(theta), std::move(low), std::move(high)} {}

  json Descriptor() const override {
    json d = BaseDescriptor();
    d["theta"] = source()->ToJson(params_.theta);
    d["low"] = target()->ToJson(params_.low);
    d["high"] = target()->ToJson(params_.high);
    return d;
  }
  const ThresholdParams& params() const { return params_; }

 protected:
  Value DoApply(const Value& a) const override {
    return source()->Leq(params_.theta, a) ? params_.high : params_.low;
  }

 private:
  ThresholdParams params_;
};

class ProjectionMapping final : public Mapping {
 public:
  ProjectionMapping(SemiringPtr product, SemiringPtr factor, std::size_t j)
      : Mapping(MappingKind::kProjection, std::move(product),
                std::move(factor)),
        index_(j) {}
  json Descriptor() const override {
    json d = BaseDescriptor();
    d["index"] = index_;
    return d;
  }
  std::size_t index() const { return index_; }

 protected:
  Value DoApply(const Value& a) const override { return a.as_tuple()[index_]; }

 private:
  std::size_t index_;
};

class NaturalMapping final : public Mapping {
 public:
  NaturalMapping(SemiringPtr source, SemiringPtr quotient,
                 std::vector<std::uint32_t> block_of,
                 std::vector<std::vector<Value>> blocks)
      : Mapping(MappingKind::kNatural, std::move(source), std::move(quotient)),
        block_of_(std::move(block_of)),
        blocks_(std::move(blocks)) {}
  json Descriptor() const override {
    json d = BaseDescriptor();
    json blocks = json::array();
    for (const auto& b : blocks_) {
      json block = json::array();
      for (const auto& v : b) block.push_back(source()->ToJson(v));
      blocks.push_back(std::move(block));
    }
    d["blocks"] = std::move(blocks);
    return d;
  }
  const std::vector<std::vector<Value>>& blocks() const { return blocks_; }

 protected:
  Value DoApply(const Value& a) const override {
    return Value::Elem(block_of_[source()->IndexOf(a)]);
  }

 private:
  std::vector<std::uint32_t> block_of_;
  std::vector<std::vector<Value>> blocks_;
};

class ComposedMapping final : public Mapping {
 public:
  ComposedMapping(MappingPtr first, MappingPtr second)
      : Mapping(MappingKind::kCompose, first->source(), second->target()),
        first_(std::move(first)),
        second_(std::move(second)) {}
  json Descriptor() const override {
    json d = BaseDescriptor();
    d["maps"] = json::array({first_->Descriptor(), second_->Descriptor()});
    return d;
  }
  std::pair<MappingPtr, MappingPtr> parts() const { return {first_, second_}; }

 protected:
  Value DoApply(const Value& a) const override {
    return second_->Apply(first_->Apply(a));
  }

 private:
  MappingPtr first_;
  MappingPtr second_;
};

}  // namespace

MappingPtr MakeTableMapping(SemiringPtr source, SemiringPtr target,
                            std::vector<Value> images) {
  if (!source->is_finite() || source->size() > kMaxTabulatedCarrier) {
    throw InputError("table mappings need a small finite source");
  }
  if (images.size() != source->size()) {
    throw InputError("table mapping must give one image per source element");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!target->Contains(images[i])) {
      throw InputError("image " + images[i].DebugString() +
                       " is not in the target carrier");
    }
  }
  return std::make_shared<TableMapping>(std::move(source), std::move(target),
                                        std::move(images));
}

MappingPtr MakeTableMapping(SemiringPtr source, SemiringPtr target,
                            const std::vector<std::pair<Value, Value>>& pairs) {
  if (!source->is_finite() || source->size() > kMaxTabulatedCarrier) {
    throw InputError("table mappings need a small finite source");
  }
  std::vector<std::optional<Value>> slots(source->size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& [from, to] = pairs[k];
    const std::string loc = "/pairs/" + std::to_string(k);
    if (!source->Contains(from)) {
      throw InputError("source value not in carrier", loc + "/0");
    }
    if (!target->Contains(to)) {
      throw InputError("target value not in carrier", loc + "/1");
    }
    auto& slot = slots[source->IndexOf(from)];
    if (slot.has_value()) {
      throw InputError("source value " + source->Format(from) +
                           " is mapped twice",
                       loc);
    }
    slot = to;
  }
  std::vector<Value> images;
  images.reserve(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (!slots[i]) {
      throw InputError("mapping is not total: no image for " +
                       source->Format(source->ElementAt(i)));
    }
    images.push_back(std::move(*slots[i]));
  }
  return std::make_shared<TableMapping>(std::move(source), std::move(target),
                                        std::move(images));
}

MappingPtr MakeIdentity(SemiringPtr s) {
  return std::make_shared<IdentityMapping>(std::move(s));
}

MappingPtr MakeThreshold(SemiringPtr source, SemiringPtr target, Value theta,
                         Value low, Value high) {
  if (!source->is_total()) {
    throw PreconditionError("threshold mappings need a totally ordered source");
  }
  source->CheckMember(theta);
  target->CheckMember(low);
  target->CheckMember(high);
  return std::make_shared<ThresholdMapping>(std::move(source),
                                            std::move(target), std::move(theta),
                                            std::move(low), std::move(high));
}

MappingPtr MakeProjection(SemiringPtr product, std::size_t j) {
  const auto& factors = ProductFactors(*product);
  if (j >= factors.size()) throw InputError("projection index out of range");
  SemiringPtr factor = factors[j];
  return std::make_shared<ProjectionMapping>(std::move(product),
                                             std::move(factor), j);
}

MappingPtr MakeNatural(SemiringPtr source, SemiringPtr quotient,
                       std::vector<std::uint32_t> block_of,
                       std::vector<std::vector<Value>> blocks) {
  if (block_of.size() != source->size()) {
    throw InputError("natural map needs one block per source element");
  }
  return std::make_shared<NaturalMapping>(std::move(source),
                                          std::move(quotient),
                                          std::move(block_of),
                                          std::move(blocks));
}

MappingPtr Compose(MappingPtr first, MappingPtr second) {
  if (!first->target()->SameAs(*second->source())) {
    throw InputError("cannot compose " + first->Name() + " with " +
                     second->Name());
  }
  return std::make_shared<ComposedMapping>(std::move(first),
                                           std::move(second));
}

std::vector<Value> Tabulate(const Mapping& m) {
  std::vector<Value> out;
  for (const Value& v : m.source()->Elements()) out.push_back(m.Apply(v));
  return out;
}

std::size_t ProjectionIndex(const Mapping& m) {
  auto* p = dynamic_cast<const ProjectionMapping*>(&m);
  if (!p) throw PreconditionError(m.Name() + " is not a projection");
  return p->index();
}

const std::vector<std::vector<Value>>& NaturalBlocks(const Mapping& m) {
  auto* p = dynamic_cast<const NaturalMapping*>(&m);
  if (!p) throw PreconditionError(m.Name() + " is not a natural map");
  return p->blocks();
}

ThresholdParams ThresholdParameters(const Mapping& m) {
  auto* p = dynamic_cast<const ThresholdMapping*>(&m);
  if (!p) throw PreconditionError(m.Name() + " is not a threshold map");
  return p->params();
}

std::pair<MappingPtr, MappingPtr> ComposeParts(const Mapping& m) {
  auto* p = dynamic_cast<const ComposedMapping*>(&m);
  if (!p) throw PreconditionError(m.Name() + " is not a composition");
  return p->parts();
}

}  // namespace softabs
