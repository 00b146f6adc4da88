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

#include "softabs/congruence.h"

#include <algorithm>
#include <limits>

namespace softabs {

std::string_view OperationName(Operation op) {
  return op == Operation::kSum ? "sum" : "prod";
}

NotACongruence::NotACongruence(CongruenceWitness w)
    : Error("partition is not a congruence: " +
            std::string(OperationName(w.op)) + " does not respect blocks"),
      witness_(std::move(w)) {}

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// block id for every carrier index.
std::vector<std::uint32_t> BlockIds(const Semiring& s, const Partition& p) {
  if (!s.is_finite() || s.size() > kMaxTabulatedCarrier) {
    throw PreconditionError("congruences need a small finite carrier");
  }
  std::vector<std::uint32_t> ids(s.size(), kUnassigned);
  for (std::size_t b = 0; b < p.size(); ++b) {
    const std::string where = "/" + std::to_string(b);
    if (p[b].empty()) throw InputError("empty block", where);
    for (const Value& v : p[b]) {
      if (!s.Contains(v)) {
        throw InputError(v.DebugString() + " is not in the carrier", where);
      }
      auto& slot = ids[s.IndexOf(v)];
      if (slot != kUnassigned) {
        throw InputError(s.Format(v) + " appears in two blocks", where);
      }
      slot = static_cast<std::uint32_t>(b);
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == kUnassigned) {
      throw InputError("partition misses " + s.Format(s.ElementAt(i)));
    }
  }
  return ids;
}

CongruenceCheck Respect(const Semiring& s, const Partition& p,
                        const std::vector<std::uint32_t>& ids, Operation op) {
  auto apply = [&](const Value& a, const Value& b) {
    return op == Operation::kSum ? s.Sum(a, b) : s.Prod(a, b);
  };
  auto block = [&](const Value& v) { return ids[s.IndexOf(v)]; };
  const std::vector<Value> xs = s.Elements();
  for (const Value& a : xs) {
    for (const Value& b : xs) {
      const std::uint32_t target = block(apply(a, b));
      for (const Value& a2 : p[block(a)]) {
        for (const Value& b2 : p[block(b)]) {
          if (block(apply(a2, b2)) != target) {
            return {false, CongruenceWitness{op, a, a2, b, b2}};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace

CongruenceCheck CheckBlockRespect(const Semiring& s, const Partition& p,
                                  Operation op) {
  return Respect(s, p, BlockIds(s, p), op);
}

CongruenceCheck IsCongruence(const Semiring& s, const Partition& p) {
  auto ids = BlockIds(s, p);
  CongruenceCheck sum = Respect(s, p, ids, Operation::kSum);
  if (!sum.ok) return sum;
  return Respect(s, p, ids, Operation::kProd);
}

QuotientResult Quotient(const SemiringPtr& s, const Partition& p) {
  std::vector<std::uint32_t> ids = BlockIds(*s, p);
  CongruenceCheck check = Respect(*s, p, ids, Operation::kSum);
  if (check.ok) check = Respect(*s, p, ids, Operation::kProd);
  if (!check.ok) throw NotACongruence(*check.witness);

  // Renumber blocks by smallest member index; sort members by index.
  const std::size_t n = s->size();
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> renamed(p.size(), kUnassigned);
  for (std::size_t i = 0; i < n; ++i) {
    if (renamed[ids[i]] == kUnassigned) {
      renamed[ids[i]] = static_cast<std::uint32_t>(order.size());
      order.push_back(ids[i]);
    }
  }
  std::vector<std::vector<Value>> blocks(order.size());
  std::vector<std::uint32_t> block_of(n);
  std::vector<std::uint32_t> rep(order.size(), kUnassigned);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t b = renamed[ids[i]];
    block_of[i] = b;
    blocks[b].push_back(s->ElementAt(i));
    if (rep[b] == kUnassigned) rep[b] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::string> names;
  for (const auto& block : blocks) {
    std::string name = "[";
    for (std::size_t k = 0; k < block.size(); ++k) {
      if (k) name += "|";
      name += s->Format(block[k]);
    }
    names.push_back(name + "]");
  }
  const std::size_t q = blocks.size();
  std::vector<std::uint32_t> sum(q * q), prod(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Value a = s->ElementAt(rep[i]);
      Value b = s->ElementAt(rep[j]);
      sum[i * q + j] = block_of[s->IndexOf(s->Sum(a, b))];
      prod[i * q + j] = block_of[s->IndexOf(s->Prod(a, b))];
    }
  }
  SemiringPtr quotient =
      MakeTable(std::move(names), std::move(sum), std::move(prod),
                block_of[s->IndexOf(s->zero())], block_of[s->IndexOf(s->one())]);
  MappingPtr natural =
      MakeNatural(s, quotient, std::move(block_of), std::move(blocks));
  return {std::move(quotient), std::move(natural)};
}

Partition KernelPartition(const Mapping& m) {
  Partition out;
  std::vector<Value> keys;
  for (const Value& x : m.source()->Elements()) {
    Value y = m.Apply(x);
    auto it = std::find(keys.begin(), keys.end(), y);
    if (it == keys.end()) {
      keys.push_back(y);
      out.push_back({x});
    } else {
      out[it - keys.begin()].push_back(x);
    }
  }
  return out;
}

}  // namespace softabs
