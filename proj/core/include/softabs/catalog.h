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
// A catalog of small finite c-semirings and the maps between them.
//
// Sizes 2 to 5 are enumerated exhaustively up to isomorphism: every bounded
// lattice order on the middle elements, every commutative product table with
// unit 1 and absorbing 0, filtered by the axiom checker and reduced to one
// representative per relabelling of the middle elements. A few size-6
// semirings are added by hand.

#ifndef SOFTABS_CATALOG_H_
#define SOFTABS_CATALOG_H_

#include <cstddef>
#include <string>
#include <vector>

#include "softabs/mapping.h"
#include "softabs/semiring.h"

namespace softabs {

struct CatalogEntry {
  // "c4.2" for the third size-4 representative; hand-added entries carry
  // descriptive names.
  std::string name;
  SemiringPtr semiring;
};

// One representative per isomorphism class of c-semirings with n elements,
// 2 <= n <= 5, in a fixed order. Elements are named 0, a, b, c, 1.
std::vector<SemiringPtr> EnumerateCSemirings(std::size_t n);

// Exhaustive sizes 2..5 followed by the hand-added size-6 entries: a 6-chain
// with min, a 6-chain with truncated addition, and boolean x 3-chain. Built
// once and shared.
const std::vector<CatalogEntry>& Catalog();
// Entries with at most `max_size` elements, catalog order.
std::vector<CatalogEntry> CatalogUpTo(std::size_t max_size);
std::vector<CatalogEntry> TotallyOrdered(std::size_t max_size);

// Every map s -> t with alpha(0) = 0~ and alpha(1) = 1~, in lexicographic
// order of images. Throws PreconditionError past `limit` maps.
std::vector<MappingPtr> EndpointMaps(const SemiringPtr& s, const SemiringPtr& t,
                                     std::size_t limit = 1 << 16);

// Every homomorphism s -> t, by backtracking over images in index order.
std::vector<MappingPtr> Homomorphisms(const SemiringPtr& s,
                                      const SemiringPtr& t);

struct CatalogMap {
  std::size_t source;  // catalog index
  std::size_t target;
  MappingPtr map;
};

// Homomorphisms between all ordered pairs of catalog entries of at most
// `max_size` elements. Cached per size bound.
const std::vector<CatalogMap>& CatalogHomomorphisms(std::size_t max_size = 6);

}  // namespace softabs

#endif  // SOFTABS_CATALOG_H_
