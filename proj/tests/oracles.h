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
// Slow, obviously-correct reference implementations used by the tests.
// Nothing here calls the solver or the property checkers.

#ifndef SOFTABS_TESTS_ORACLES_H_
#define SOFTABS_TESTS_ORACLES_H_

#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "softabs/mapping.h"
#include "softabs/scsp.h"

namespace softabs {

// Readable gtest failure messages.
inline void PrintTo(const Value& v, std::ostream* os) { *os << v.DebugString(); }

}  // namespace softabs

namespace softabs::oracle {

// Every full assignment of V, product of every constraint entry, summed into
// the bucket of its restriction to con.
inline std::map<Assignment, Value> Solve(const Problem& p) {
  const Semiring& s = p.semiring();
  const std::size_t nv = p.system->variables().size();
  const std::size_t d = p.system->domain_size();
  std::map<Assignment, Value> out;
  Assignment full(nv, 0);
  while (true) {
    Value v = s.one();
    for (const Constraint& c : p.constraints) {
      std::size_t off = 0;
      for (VarId x : c.scope()) off = off * d + full[x];
      v = s.Prod(v, c.table()[off]);
    }
    Assignment key;
    for (VarId x : p.con) key.push_back(full[x]);
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, v);
    } else {
      it->second = s.Sum(it->second, v);
    }
    std::size_t k = nv;
    while (k > 0 && ++full[k - 1] == d) full[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

// Tuples whose value nothing strictly exceeds, by a pairwise scan of a+b.
inline std::set<Assignment> Optima(const Semiring& s,
                                   const std::map<Assignment, Value>& sol) {
  auto strictly_below = [&](const Value& a, const Value& b) {
    return a != b && s.Sum(a, b) == b;
  };
  std::set<Assignment> out;
  for (const auto& [t, v] : sol) {
    bool maximal = true;
    for (const auto& [u, w] : sol) maximal = maximal && !strictly_below(v, w);
    if (maximal) out.insert(t);
  }
  return out;
}

inline std::set<Assignment> Optima(const Problem& p) {
  return Optima(p.semiring(), oracle::Solve(p));
}

inline bool Leq(const Semiring& s, const Value& a, const Value& b) {
  return s.Sum(a, b) == b;
}

// Quantifies `f` over all pairs of source elements.
inline bool ForAllPairs(const Mapping& m,
                        const std::function<bool(const Value&, const Value&)>& f) {
  const auto xs = m.source()->Elements();
  for (const Value& a : xs) {
    for (const Value& b : xs) {
      if (!f(a, b)) return false;
    }
  }
  return true;
}

inline bool Endpoints(const Mapping& m) {
  return m.Apply(m.source()->zero()) == m.target()->zero() &&
         m.Apply(m.source()->one()) == m.target()->one();
}

inline bool Monotone(const Mapping& m) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  return ForAllPairs(m, [&](const Value& a, const Value& b) {
    return !Leq(s, a, b) || Leq(t, m.Apply(a), m.Apply(b));
  });
}

inline bool Homomorphism(const Mapping& m) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  return Endpoints(m) && ForAllPairs(m, [&](const Value& a, const Value& b) {
           return m.Apply(s.Sum(a, b)) == t.Sum(m.Apply(a), m.Apply(b)) &&
                  m.Apply(s.Prod(a, b)) == t.Prod(m.Apply(a), m.Apply(b));
         });
}

inline bool Quasi(const Mapping& m) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  return Endpoints(m) && ForAllPairs(m, [&](const Value& a, const Value& b) {
           return m.Apply(s.Sum(a, b)) == t.Sum(m.Apply(a), m.Apply(b)) &&
                  Leq(t, m.Apply(s.Prod(a, b)), t.Prod(m.Apply(a), m.Apply(b)));
         });
}

inline bool OrderReflecting(const Mapping& m) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  auto lt = [](const Semiring& r, const Value& a, const Value& b) {
    return a != b && Leq(r, a, b);
  };
  return ForAllPairs(m, [&](const Value& a, const Value& b) {
    return !lt(t, m.Apply(a), m.Apply(b)) || lt(s, a, b);
  });
}

inline bool Isomorphism(const Mapping& m) {
  if (!Homomorphism(m)) return false;
  std::set<std::size_t> images;
  for (const Value& a : m.source()->Elements()) {
    images.insert(m.target()->IndexOf(m.Apply(a)));
  }
  return images.size() == m.source()->size() &&
         images.size() == m.target()->size();
}

// All nonempty multisets of at most k source elements, as index lists.
inline std::vector<std::vector<std::size_t>> Multisets(std::size_t n,
                                                       std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < n; ++i) {
      cur.push_back(i);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Products prod(I) and prod~(alpha(I)) over every multiset of size <= k.
inline std::vector<std::pair<Value, Value>> SetProducts(const Mapping& m,
                                                        std::size_t k) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  const auto xs = s.Elements();
  std::vector<std::pair<Value, Value>> out;
  for (const auto& set : Multisets(xs.size(), k)) {
    Value conc = s.one(), abs = t.one();
    for (std::size_t i : set) {
      conc = s.Prod(conc, xs[i]);
      abs = t.Prod(abs, m.Apply(xs[i]));
    }
    out.emplace_back(conc, abs);
  }
  return out;
}

inline bool OrderPreserving(const Mapping& m, std::size_t k) {
  const Semiring& s = *m.source();
  const Semiring& t = *m.target();
  const auto prods = SetProducts(m, k);
  for (const auto& [c1, a1] : prods) {
    for (const auto& [c2, a2] : prods) {
      if (Leq(t, a1, a2) && !Leq(s, c1, c2)) return false;
    }
  }
  return true;
}

inline bool AggregationCompatible(const Mapping& m, std::size_t k) {
  const Semiring& t = *m.target();
  if (!Monotone(m) || !Endpoints(m)) return false;
  const auto prods = SetProducts(m, k);
  for (const auto& [c1, a1] : prods) {
    for (const auto& [c2, a2] : prods) {
      if (Leq(t, m.Apply(c1), m.Apply(c2)) && !Leq(t, a1, a2)) return false;
    }
  }
  return true;
}

}  // namespace softabs::oracle

#endif  // SOFTABS_TESTS_ORACLES_H_
