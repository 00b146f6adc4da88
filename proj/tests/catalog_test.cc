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

#include "softabs/catalog.h"

#include <algorithm>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "oracles.h"

namespace softabs {
namespace {

// Independent enumeration of c-semirings on {0..n-1} (0 bottom, n-1 top),
// up to relabelling the inner elements. Returns the number of classes.
std::size_t BruteForceCount(std::size_t n) {
  const std::size_t k = n - 2;
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) offdiag.emplace_back(i, j);
    }
  }
  std::set<std::vector<std::size_t>> classes;
  for (std::size_t mask = 0; mask < (1u << offdiag.size()); ++mask) {
    // leq over all n elements
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      le[0][a] = le[a][n - 1] = le[a][a] = true;
    }
    for (std::size_t b = 0; b < offdiag.size(); ++b) {
      if (mask >> b & 1) le[offdiag[b].first + 1][offdiag[b].second + 1] = true;
    }
    bool order = true;
    for (std::size_t a = 0; a < n && order; ++a) {
      for (std::size_t b = 0; b < n && order; ++b) {
        if (a != b && le[a][b] && le[b][a]) order = false;
        for (std::size_t c = 0; c < n && order; ++c) {
          if (le[a][b] && le[b][c] && !le[a][c]) order = false;
        }
      }
    }
    if (!order) continue;
    std::vector<std::size_t> join(n * n);
    bool lattice = true;
    for (std::size_t a = 0; a < n && lattice; ++a) {
      for (std::size_t b = 0; b < n && lattice; ++b) {
        std::vector<std::size_t> ub;
        for (std::size_t c = 0; c < n; ++c) {
          if (le[a][c] && le[b][c]) ub.push_back(c);
        }
        auto least = std::find_if(ub.begin(), ub.end(), [&](std::size_t c) {
          return std::all_of(ub.begin(), ub.end(), [&](std::size_t d) { return le[c][d]; });
        });
        if (least == ub.end()) lattice = false;
        else join[a * n + b] = *least;
      }
    }
    if (!lattice) continue;
    // Symmetric product on inner pairs; 0 absorbs, n-1 is the unit.
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      for (std::size_t j = i; j + 1 < n; ++j) cells.emplace_back(i, j);
    }
    std::vector<std::size_t> choice(cells.size(), 0);
    std::vector<std::size_t> prod(n * n);
    while (true) {
      for (std::size_t a = 0; a < n; ++a) {
        prod[a] = prod[a * n] = 0;
        prod[(n - 1) * n + a] = prod[a * n + n - 1] = a;
      }
      prod[0] = 0;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        prod[cells[c].first * n + cells[c].second] = choice[c];
        prod[cells[c].second * n + cells[c].first] = choice[c];
      }
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          for (std::size_t c = 0; c < n && ok; ++c) {
            ok = prod[prod[a * n + b] * n + c] == prod[a * n + prod[b * n + c]] &&
                 prod[a * n + join[b * n + c]] ==
                     join[prod[a * n + b] * n + prod[a * n + c]];
          }
        }
      }
      if (ok) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::size_t> best;
        do {
          std::vector<std::size_t> key(2 * n * n);
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
              key[perm[a] * n + perm[b]] = perm[join[a * n + b]];
              key[n * n + perm[a] * n + perm[b]] = perm[prod[a * n + b]];
            }
          }
          if (best.empty() || key < best) best = key;
        } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
        classes.insert(best);
      }
      std::size_t c = 0;
      while (c < choice.size() && ++choice[c] == n) choice[c++] = 0;
      if (c == choice.size()) break;
    }
  }
  return classes.size();
}

TEST(Catalog, CountsMatchBruteForce) {
  for (std::size_t n = 2; n <= 5; ++n) {
    SCOPED_TRACE(n);
    EXPECT_EQ(EnumerateCSemirings(n).size(), BruteForceCount(n));
  }
}

TEST(Catalog, FrozenCounts) {
  const std::size_t expected[] = {0, 0, 1, 2, 7, 26};
  for (std::size_t n = 2; n <= 5; ++n) {
    EXPECT_EQ(EnumerateCSemirings(n).size(), expected[n]);
  }
  EXPECT_EQ(Catalog().size(), 39u);
  EXPECT_EQ(CatalogUpTo(4).size(), 10u);
  EXPECT_EQ(TotallyOrdered(4).size(), 9u);
  EXPECT_EQ(TotallyOrdered(6).size(), 33u);
  for (const auto& e : TotallyOrdered(6)) EXPECT_TRUE(e.semiring->is_total());
}

TEST(Catalog, EntriesAreCSemirings) {
  for (const auto& e : Catalog()) {
    const Semiring& s = *e.semiring;
    SCOPED_TRACE(e.name);
    for (const Value& a : s.Elements()) {
      EXPECT_EQ(s.Sum(a, a), a);
      EXPECT_EQ(s.Sum(a, s.one()), s.one());
      EXPECT_EQ(s.Prod(a, s.one()), a);
      EXPECT_EQ(s.Prod(a, s.zero()), s.zero());
      for (const Value& b : s.Elements()) {
        for (const Value& c : s.Elements()) {
          EXPECT_EQ(s.Prod(a, s.Sum(b, c)), s.Sum(s.Prod(a, b), s.Prod(a, c)));
        }
      }
    }
  }
}

TEST(Catalog, EndpointMapsAndHomomorphismsMatchBruteForce) {
  std::size_t endpoint_total = 0;
  for (const auto& s : CatalogUpTo(4)) {
    for (const auto& t : CatalogUpTo(4)) {
      auto maps = EndpointMaps(s.semiring, t.semiring);
      std::size_t ns = s.semiring->size(), nt = t.semiring->size();
      std::size_t expected = 1;
      for (std::size_t i = 2; i < ns; ++i) expected *= nt;
      EXPECT_EQ(maps.size(), expected);
      endpoint_total += maps.size();
      std::size_t homs = 0;
      for (const auto& m : maps) {
        EXPECT_TRUE(oracle::Endpoints(*m));
        homs += oracle::Homomorphism(*m);
      }
      EXPECT_EQ(Homomorphisms(s.semiring, t.semiring).size(), homs)
          << s.name << " -> " << t.name;
    }
  }
  EXPECT_EQ(endpoint_total, 1020u);
}

TEST(Catalog, HomomorphismCatalog) {
  const auto& homs = CatalogHomomorphisms(6);
  EXPECT_EQ(homs.size(), 8228u);
  std::size_t reflecting = 0;
  for (const auto& h : homs) {
    EXPECT_TRUE(oracle::Homomorphism(*h.map));
    reflecting += oracle::OrderReflecting(*h.map);
  }
  EXPECT_EQ(reflecting, 7396u);
}

}  // namespace
}  // namespace softabs
