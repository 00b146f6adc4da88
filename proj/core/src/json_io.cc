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

#include "softabs/json_io.h"

#include <fstream>
#include <map>
#include <set>

#include "softabs/congruence.h"
#include "softabs/errors.h"

namespace softabs {

using nlohmann::json;

namespace {

const json& Field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError("expected an object", where);
  auto it = j.find(key);
  if (it == j.end()) {
    throw InputError(std::string("missing field '") + key + "'", where);
  }
  return *it;
}

std::vector<std::string> Names(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError("expected an array of names", where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw InputError("expected a name", where + "/" + std::to_string(i));
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::string At(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

// Re-tags errors from deeper layers so they carry a location.
template <typename F>
auto Located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    if (!e.location().empty()) throw;
    throw InputError(e.what(), where);
  } catch (const Error& e) {
    throw InputError(e.what(), where);
  }
}

}  // namespace

json ReadJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

MappingPtr ParseMapping(const json& j, const std::string& where) {
  const json& kind_field = Field(j, "kind", where);
  if (!kind_field.is_string()) {
    throw InputError("'kind' must be a string", where + "/kind");
  }
  const std::string kind = kind_field.get<std::string>();
  if (kind == "compose") {
    const json& maps = Field(j, "maps", where);
    if (!maps.is_array() || maps.size() != 2) {
      throw InputError("'maps' must hold two mappings", where + "/maps");
    }
    MappingPtr first = ParseMapping(maps[0], where + "/maps/0");
    MappingPtr second = ParseMapping(maps[1], where + "/maps/1");
    return Located(where, [&] { return Compose(first, second); });
  }
  SemiringPtr source = MakeBuiltin(Field(j, "source", where), where + "/source");
  if (kind == "identity") return MakeIdentity(source);
  if (kind == "projection") {
    const json& idx = Field(j, "index", where);
    if (!idx.is_number_unsigned() &&
        !(idx.is_number_integer() && idx.get<std::int64_t>() >= 0)) {
      throw InputError("'index' must be a non-negative integer", where + "/index");
    }
    return Located(where + "/index",
                   [&] { return MakeProjection(source, idx.get<std::size_t>()); });
  }
  if (kind == "natural") {
    const std::string loc = where + "/blocks";
    const json& bj = Field(j, "blocks", where);
    if (!bj.is_array()) throw InputError("expected an array of blocks", loc);
    Partition blocks;
    for (std::size_t i = 0; i < bj.size(); ++i) {
      if (!bj[i].is_array()) throw InputError("expected a block", At(loc, i));
      std::vector<Value> block;
      for (std::size_t k = 0; k < bj[i].size(); ++k) {
        block.push_back(source->FromJson(bj[i][k], At(At(loc, i), k)));
      }
      blocks.push_back(std::move(block));
    }
    QuotientResult q = Located(loc, [&] { return Quotient(source, blocks); });
    if (j.contains("target")) {
      SemiringPtr t = MakeBuiltin(j["target"], where + "/target");
      if (!t->SameAs(*q.semiring)) {
        throw InputError("target is not the quotient by these blocks",
                         where + "/target");
      }
    }
    return q.natural;
  }
  SemiringPtr target = MakeBuiltin(Field(j, "target", where), where + "/target");
  if (kind == "table") {
    const std::string loc = where + "/pairs";
    const json& pj = Field(j, "pairs", where);
    if (!pj.is_array()) throw InputError("expected an array of pairs", loc);
    std::vector<std::pair<Value, Value>> pairs;
    for (std::size_t i = 0; i < pj.size(); ++i) {
      if (!pj[i].is_array() || pj[i].size() != 2) {
        throw InputError("expected [source, target]", At(loc, i));
      }
      pairs.emplace_back(source->FromJson(pj[i][0], At(At(loc, i), 0)),
                         target->FromJson(pj[i][1], At(At(loc, i), 1)));
    }
    return Located(loc, [&] { return MakeTableMapping(source, target, pairs); });
  }
  if (kind == "threshold") {
    Value theta = source->FromJson(Field(j, "theta", where), where + "/theta");
    Value low = target->FromJson(Field(j, "low", where), where + "/low");
    Value high = target->FromJson(Field(j, "high", where), where + "/high");
    return Located(where, [&] {
      return MakeThreshold(source, target, theta, low, high);
    });
  }
  throw InputError("unknown mapping kind '" + kind + "'", where + "/kind");
}

Problem ParseProblem(const json& j, const std::string& where) {
  const std::string sloc = where + "/system";
  const json& sj = Field(j, "system", where);
  SemiringPtr s = MakeBuiltin(Field(sj, "semiring", sloc), sloc + "/semiring");
  auto domain = Names(Field(sj, "domain", sloc), sloc + "/domain");
  auto vars = Names(Field(sj, "variables", sloc), sloc + "/variables");
  SystemPtr sys = Located(sloc, [&] {
    return std::make_shared<const ConstraintSystem>(s, domain, vars);
  });
  const std::size_t d = sys->domain_size();

  auto scope_of = [&](const json& names, const std::string& loc) {
    auto list = Names(names, loc);
    std::set<std::string> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (!seen.insert(list[i]).second) {
        throw InputError("duplicate variable '" + list[i] + "'", At(loc, i));
      }
    }
    return Located(loc, [&] { return sys->MakeScope(list); });
  };

  Scope con = scope_of(Field(j, "con", where), where + "/con");
  const std::string cloc = where + "/constraints";
  const json& cj = Field(j, "constraints", where);
  if (!cj.is_array()) throw InputError("expected an array", cloc);
  std::vector<Constraint> cs;
  for (std::size_t c = 0; c < cj.size(); ++c) {
    const std::string loc = At(cloc, c);
    const json& one = cj[c];
    auto names = Names(Field(one, "scope", loc), loc + "/scope");
    Scope scope = scope_of(one["scope"], loc + "/scope");
    const std::size_t count = TupleCount(d, scope.size());
    std::vector<Value> table(count);
    std::vector<bool> set(count, false);
    if (one.contains("fill")) {
      Value fill = s->FromJson(one["fill"], loc + "/fill");
      std::fill(table.begin(), table.end(), fill);
      std::fill(set.begin(), set.end(), true);
    }
    std::vector<bool> listed(count, false);
    const json& ej = one.contains("entries") ? one["entries"] : json::array();
    if (!ej.is_array()) throw InputError("expected an array", loc + "/entries");
    for (std::size_t e = 0; e < ej.size(); ++e) {
      const std::string eloc = At(loc + "/entries", e);
      if (!ej[e].is_array() || ej[e].size() != 2) {
        throw InputError("expected [tuple, value]", eloc);
      }
      auto tuple_names = Names(ej[e][0], eloc + "/0");
      if (tuple_names.size() != names.size()) {
        throw InputError("tuple length does not match the scope", eloc + "/0");
      }
      // Tuples follow the scope as written; tables follow sorted order.
      Assignment t(scope.size());
      for (std::size_t i = 0; i < names.size(); ++i) {
        const VarId v = sys->Var(names[i]);
        const std::size_t pos =
            std::lower_bound(scope.begin(), scope.end(), v) - scope.begin();
        t[pos] = Located(At(eloc + "/0", i),
                         [&] { return sys->DomainIndex(tuple_names[i]); });
      }
      std::size_t off = 0;
      for (std::uint32_t x : t) off = off * d + x;
      if (listed[off]) throw InputError("duplicate tuple", eloc + "/0");
      listed[off] = set[off] = true;
      table[off] = s->FromJson(ej[e][1], eloc + "/1");
    }
    for (std::size_t i = 0; i < count; ++i) {
      if (!set[i]) {
        throw InputError("table is not total and has no fill", loc);
      }
    }
    cs.emplace_back(std::move(scope), std::move(table), d);
  }
  return Located(where, [&] {
    return MakeProblem(std::move(sys), std::move(cs), std::move(con));
  });
}

json AssignmentToJson(const ConstraintSystem& sys, const Scope& scope,
                      const Assignment& t) {
  json out = json::object();
  for (std::size_t i = 0; i < scope.size(); ++i) {
    out[sys.variables()[scope[i]]] = sys.domain()[t[i]];
  }
  return out;
}

json ProblemToJson(const Problem& p) {
  const ConstraintSystem& sys = *p.system;
  const Semiring& s = p.semiring();
  auto names = [&](const Scope& sc) {
    json out = json::array();
    for (VarId v : sc) out.push_back(sys.variables()[v]);
    return out;
  };
  json cs = json::array();
  for (const Constraint& c : p.constraints) {
    json entries = json::array();
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c.table()[i] == s.zero()) continue;
      json tuple = json::array();
      for (std::uint32_t x : TupleAt(i, sys.domain_size(), c.scope().size())) {
        tuple.push_back(sys.domain()[x]);
      }
      entries.push_back(json::array({std::move(tuple), s.ToJson(c.table()[i])}));
    }
    cs.push_back({{"scope", names(c.scope())},
                  {"fill", s.ToJson(s.zero())},
                  {"entries", std::move(entries)}});
  }
  return {{"system",
           {{"semiring", s.Descriptor()},
            {"domain", sys.domain()},
            {"variables", sys.variables()}}},
          {"con", names(p.con)},
          {"constraints", std::move(cs)}};
}

json SolutionToJson(const Problem& p, const SolutionTable& sol) {
  const Semiring& s = p.semiring();
  json rows = json::array();
  for (std::size_t i = 0; i < sol.values.size(); ++i) {
    rows.push_back({{"assignment", AssignmentToJson(*p.system, sol.con,
                                                    sol.TupleAt(i))},
                    {"value", s.ToJson(sol.values[i])}});
  }
  json opt = json::array();
  for (std::size_t i : sol.optimal) {
    opt.push_back({{"assignment",
                    AssignmentToJson(*p.system, sol.con, sol.TupleAt(i))},
                   {"value", s.ToJson(sol.values[i])}});
  }
  return {{"semiring", s.Name()}, {"solution", std::move(rows)},
          {"optimal", std::move(opt)}};
}

json ReportToJson(const PropertyReport& r, const Semiring& source,
                  const Semiring& target) {
  json out{{"property", r.property},
           {"verdict", VerdictName(r.verdict)},
           {"exhaustive", r.exhaustive},
           {"evaluated", r.evaluated}};
  if (!r.reason.empty()) out["reason"] = r.reason;
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.witness.empty()) {
    json w = json::object();
    for (const WitnessEntry& e : r.witness) {
      const Semiring& s = e.side == Side::kSource ? source : target;
      w[e.label] = s.ToJson(e.value);
    }
    out["witness"] = std::move(w);
  }
  return out;
}

}  // namespace softabs
