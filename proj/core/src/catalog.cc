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
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>

#include "softabs/errors.h"

namespace softabs {

namespace {

using Code = std::vector<std::uint8_t>;

struct Tables {
  std::size_t n;
  std::vector<std::uint8_t> sum, prod;
  std::uint8_t& S(std::size_t a, std::size_t b) { return sum[a * n + b]; }
  std::uint8_t& P(std::size_t a, std::size_t b) { return prod[a * n + b]; }
};

// Order relations on 0 < middle < 1 that are partial orders with all joins.
std::vector<std::vector<std::uint8_t>> LatticeJoins(std::size_t n) {
  const std::size_t top = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 1; i < top; ++i) {
    for (std::size_t j = 1; j < top; ++j) {
      if (i != j) free.emplace_back(i, j);
    }
  }
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t mask = 0; mask < (1ull << free.size()); ++mask) {
    std::vector<std::uint8_t> le(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      le[a * n + a] = 1;
      le[0 * n + a] = 1;
      le[a * n + top] = 1;
    }
    for (std::size_t k = 0; k < free.size(); ++k) {
      if (mask >> k & 1) le[free[k].first * n + free[k].second] = 1;
    }
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        if (a != b && le[a * n + b] && le[b * n + a]) ok = false;
        for (std::size_t c = 0; c < n && ok; ++c) {
          if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<std::uint8_t> join(n * n);
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) {
        std::optional<std::size_t> least;
        for (std::size_t u = 0; u < n; ++u) {
          if (!le[a * n + u] || !le[b * n + u]) continue;
          bool below_all = true;
          for (std::size_t w = 0; w < n; ++w) {
            if (le[a * n + w] && le[b * n + w] && !le[u * n + w]) {
              below_all = false;
            }
          }
          if (below_all) least = u;
        }
        if (!least) ok = false;
        else join[a * n + b] = static_cast<std::uint8_t>(*least);
      }
    }
    if (ok) out.push_back(std::move(join));
  }
  return out;
}

bool Valid(Tables& t) {
  const std::size_t n = t.n;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.P(t.P(a, b), c) != t.P(a, t.P(b, c))) return false;
        if (t.P(a, t.S(b, c)) != t.S(t.P(a, b), t.P(a, c))) return false;
      }
    }
  }
  return true;
}

Code Canonical(const Tables& t) {
  const std::size_t n = t.n;
  std::vector<std::uint8_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code best;
  do {
    Code code(2 * n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        code[perm[a] * n + perm[b]] = perm[t.sum[a * n + b]];
        code[n * n + perm[a] * n + perm[b]] = perm[t.prod[a * n + b]];
      }
    }
    if (best.empty() || code < best) best = std::move(code);
  } while (std::next_permutation(perm.begin() + 1, perm.end() - 1));
  return best;
}

std::vector<std::string> ElementNames(std::size_t n) {
  static const char* kMiddle[] = {"a", "b", "c", "d"};
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back(kMiddle[i - 1]);
  names.push_back("1");
  return names;
}

SemiringPtr FromCode(const Code& code, std::size_t n) {
  std::vector<std::uint32_t> sum(code.begin(), code.begin() + n * n);
  std::vector<std::uint32_t> prod(code.begin() + n * n, code.end());
  return MakeTable(ElementNames(n), std::move(sum), std::move(prod), 0,
                   static_cast<std::uint32_t>(n - 1));
}

SemiringPtr Chain(std::size_t n, bool truncated_sum) {
  std::vector<std::uint32_t> sum(n * n), prod(n * n);
  const std::uint32_t top = static_cast<std::uint32_t>(n - 1);
  for (std::uint32_t a = 0; a < n; ++a) {
    for (std::uint32_t b = 0; b < n; ++b) {
      sum[a * n + b] = std::max(a, b);
      prod[a * n + b] = truncated_sum ? (a + b > top ? a + b - top : 0)
                                      : std::min(a, b);
    }
  }
  std::vector<std::string> names = ElementNames(std::min<std::size_t>(n, 6));
  return MakeTable(std::move(names), std::move(sum), std::move(prod), 0, top);
}

}  // namespace

std::vector<SemiringPtr> EnumerateCSemirings(std::size_t n) {
  if (n < 2 || n > 5) {
    throw PreconditionError("exhaustive enumeration covers sizes 2 to 5");
  }
  std::map<Code, bool> found;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) cells.emplace_back(i, j);
  }
  for (const auto& join : LatticeJoins(n)) {
    Tables t{n, join, std::vector<std::uint8_t>(n * n, 0)};
    for (std::size_t a = 0; a < n; ++a) {
      t.P(n - 1, a) = t.P(a, n - 1) = static_cast<std::uint8_t>(a);
      t.P(0, a) = t.P(a, 0) = 0;
    }
    std::vector<std::uint8_t> digits(cells.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < cells.size(); ++k) {
        auto [i, j] = cells[k];
        t.P(i, j) = t.P(j, i) = digits[k];
      }
      if (Valid(t)) found.emplace(Canonical(t), true);
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == n) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  std::vector<SemiringPtr> out;
  for (const auto& [code, unused] : found) out.push_back(FromCode(code, n));
  return out;
}

const std::vector<CatalogEntry>& Catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (std::size_t n = 2; n <= 5; ++n) {
      auto reps = EnumerateCSemirings(n);
      for (std::size_t i = 0; i < reps.size(); ++i) {
        out.push_back({"c" + std::to_string(n) + "." + std::to_string(i),
                       std::move(reps[i])});
      }
    }
    out.push_back({"chain6-min", Chain(6, false)});
    out.push_back({"chain6-truncated", Chain(6, true)});
    out.push_back({"boolean-x-chain3",
                   MakeProduct({MakeBoolean(), Chain(3, false)})});
    return out;
  }();
  return catalog;
}

std::vector<CatalogEntry> CatalogUpTo(std::size_t max_size) {
  std::vector<CatalogEntry> out;
  for (const auto& e : Catalog()) {
    if (e.semiring->size() <= max_size) out.push_back(e);
  }
  return out;
}

std::vector<CatalogEntry> TotallyOrdered(std::size_t max_size) {
  std::vector<CatalogEntry> out;
  for (const auto& e : CatalogUpTo(max_size)) {
    if (e.semiring->is_total()) out.push_back(e);
  }
  return out;
}

std::vector<MappingPtr> EndpointMaps(const SemiringPtr& s, const SemiringPtr& t,
                                     std::size_t limit) {
  const std::vector<Value> xs = s->Elements();
  const std::vector<Value> ys = t->Elements();
  const std::size_t zero = s->IndexOf(s->zero());
  const std::size_t one = s->IndexOf(s->one());
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != zero && i != one) free.push_back(i);
  }
  double count = std::pow(static_cast<double>(ys.size()),
                          static_cast<double>(free.size()));
  if (count > static_cast<double>(limit)) {
    throw PreconditionError("too many maps from " + s->Name() + " to " +
                            t->Name());
  }
  if (zero == one && t->zero() != t->one()) return {};
  std::vector<MappingPtr> out;
  std::vector<std::size_t> digits(free.size(), 0);
  while (true) {
    std::vector<Value> images(xs.size());
    images[zero] = t->zero();
    images[one] = t->one();
    for (std::size_t k = 0; k < free.size(); ++k) {
      images[free[k]] = ys[digits[k]];
    }
    out.push_back(MakeTableMapping(s, t, std::move(images)));
    if (free.empty()) return out;
    // Last digit moves fastest, so images come out lexicographically.
    std::size_t k = free.size();
    while (true) {
      --k;
      if (++digits[k] < ys.size()) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
  }
}

std::vector<MappingPtr> Homomorphisms(const SemiringPtr& s,
                                      const SemiringPtr& t) {
  const FiniteTables* a = s->tables();
  const FiniteTables* b = t->tables();
  if (!a || !b) throw PreconditionError("homomorphism search needs tables");
  const std::size_t n = a->size;
  constexpr std::uint32_t kFree = ~0u;
  std::vector<std::uint32_t> h(n, kFree);
  std::vector<MappingPtr> out;
  if (a->zero == a->one && b->zero != b->one) return out;
  h[a->zero] = b->zero;
  h[a->one] = b->one;

  // Every fully assigned (x, y, x op y) triple must commute.
  auto consistent = [&]() {
    for (std::size_t x = 0; x < n; ++x) {
      if (h[x] == kFree) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (h[y] == kFree) continue;
        std::uint32_t s_xy = a->Sum(x, y), p_xy = a->Prod(x, y);
        if (h[s_xy] != kFree && h[s_xy] != b->Sum(h[x], h[y])) return false;
        if (h[p_xy] != kFree && h[p_xy] != b->Prod(h[x], h[y])) return false;
      }
    }
    return true;
  };
  if (!consistent()) return out;

  std::function<void(std::size_t)> assign = [&](std::size_t x) {
    if (x == n) {
      std::vector<Value> images;
      for (std::size_t i = 0; i < n; ++i) images.push_back(t->ElementAt(h[i]));
      out.push_back(MakeTableMapping(s, t, std::move(images)));
      return;
    }
    if (h[x] != kFree) {
      assign(x + 1);
      return;
    }
    for (std::uint32_t y = 0; y < b->size; ++y) {
      h[x] = y;
      if (consistent()) assign(x + 1);
    }
    h[x] = kFree;
  };
  assign(0);
  return out;
}

const std::vector<CatalogMap>& CatalogHomomorphisms(std::size_t max_size) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<CatalogMap>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(max_size);
  if (it != cache.end()) return it->second;
  std::vector<CatalogMap> maps;
  const auto& cat = Catalog();
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i].semiring->size() > max_size) continue;
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (cat[j].semiring->size() > max_size) continue;
      for (auto& m : Homomorphisms(cat[i].semiring, cat[j].semiring)) {
        maps.push_back({i, j, std::move(m)});
      }
    }
  }
  return cache.emplace(max_size, std::move(maps)).first->second;
}

}  // namespace softabs
