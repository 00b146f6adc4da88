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

#include <algorithm>
#include <numeric>

#include "softabs/errors.h"
#include "softabs/property.h"

namespace softabs {

namespace {

void RequireSmall(const Semiring& s, std::size_t bound) {
  if (!s.is_finite() || s.size() > bound) {
    throw PreconditionError(s.Name() + " is too large to enumerate (bound " +
                            std::to_string(bound) + ")");
  }
}

}  // namespace

AdjointSearch FindUpperAdjoint(const MappingPtr& alpha) {
  const SemiringPtr& s = alpha->source();
  const SemiringPtr& t = alpha->target();
  RequireSmall(*s, kMaxTabulatedCarrier);
  RequireSmall(*t, kMaxTabulatedCarrier);
  PropertyReport mono = CheckProperty(*alpha, PropertyKind::kMonotonic);
  if (!mono.ok()) {
    throw PreconditionError("upper adjoint search needs a monotonic map; " +
                            s->Format(*mono.Find("a")) + " <= " +
                            s->Format(*mono.Find("b")) +
                            " but the images are not ordered");
  }

  const std::vector<Value> xs = s->Elements();
  const std::vector<Value> ys = t->Elements();
  std::vector<Value> images;
  for (const Value& x : xs) images.push_back(alpha->Apply(x));

  AdjointSearch out;
  std::vector<Value> upper;
  for (const Value& y : ys) {
    std::vector<std::size_t> down;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (t->Leq(images[i], y)) down.push_back(i);
    }
    std::optional<std::size_t> top;
    for (std::size_t i : down) {
      bool above_all = std::all_of(down.begin(), down.end(), [&](std::size_t j) {
        return s->Leq(xs[j], xs[i]);
      });
      if (above_all) {
        top = i;
        break;
      }
    }
    if (!top) {
      out.missing = y;
      return out;
    }
    upper.push_back(xs[*top]);
  }
  GaloisPair pair;
  pair.lower = alpha;
  pair.upper = MakeTableMapping(t, s, std::move(upper));
  PropertyReport insertion =
      CheckProperty(*alpha, PropertyKind::kGaloisInsertion, pair.upper.get());
  // With a monotonic lower map and maxima everywhere, only the insertion
  // clause can fail.
  pair.insertion = insertion.ok();
  out.pair = std::move(pair);
  return out;
}

std::vector<MappingPtr> IsomorphismScan(const SemiringPtr& s,
                                        const SemiringPtr& t,
                                        std::size_t bound) {
  RequireSmall(*s, bound);
  RequireSmall(*t, bound);
  std::vector<MappingPtr> found;
  if (s->size() != t->size()) return found;
  const std::vector<Value> ys = t->Elements();
  std::vector<std::size_t> perm(ys.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Value> images;
    for (std::size_t i : perm) images.push_back(ys[i]);
    MappingPtr m = MakeTableMapping(s, t, std::move(images));
    if (!m->PreservesEndpoints()) continue;
    if (CheckProperty(*m, PropertyKind::kIsomorphism).ok()) {
      found.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace softabs
