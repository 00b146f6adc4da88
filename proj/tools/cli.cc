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

#include "cli.h"

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "softabs/abstraction.h"
#include "softabs/axioms.h"
#include "softabs/errors.h"
#include "softabs/json_io.h"
#include "softabs/property.h"
#include "softabs/random_problem.h"
#include "softabs/theorems.h"

namespace softabs::cli {

using nlohmann::json;

namespace {

std::uint64_t ParseCount(std::string_view key, std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("budget '" + std::string(key) + "' needs a non-negative "
                     "integer, got '" + std::string(text) + "'", "--budget");
  }
  return v;
}

const std::string& Require(const std::string& value, const char* flag,
                           const std::string& command) {
  if (value.empty()) {
    throw InputError(command + " needs " + flag, flag);
  }
  return value;
}

std::string Tuple(const ConstraintSystem& sys, const Assignment& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += sys.domain()[t[i]];
  }
  return out + ")";
}

std::string Vars(const ConstraintSystem& sys, const Scope& sc) {
  std::string out = "(";
  for (std::size_t i = 0; i < sc.size(); ++i) {
    if (i) out += ",";
    out += sys.variables()[sc[i]];
  }
  return out + ")";
}

// Resolves --semiring: a file holding a descriptor, or a bare built-in name.
SemiringPtr LoadSemiring(const std::string& arg) {
  if (std::filesystem::exists(arg)) return MakeBuiltin(ReadJsonFile(arg));
  return MakeBuiltin(json(arg), "--semiring");
}

Problem LoadProblem(const std::string& path) {
  return ParseProblem(ReadJsonFile(path));
}

MappingPtr LoadMapping(const std::string& path) {
  return ParseMapping(ReadJsonFile(path));
}

RunReport Solve(const CommandRequest& req) {
  Problem p = LoadProblem(Require(req.problem, "--problem", "solve"));
  SolutionTable sol = softabs::Solve(p, req.jobs);
  RunReport r;
  r.payload = SolutionToJson(p, sol);
  std::ostringstream text;
  const Semiring& s = p.semiring();
  text << "solution over " << Vars(*p.system, sol.con) << " in " << s.Name()
       << "\n";
  for (std::size_t i = 0; i < sol.values.size(); ++i) {
    text << "  " << Tuple(*p.system, sol.TupleAt(i)) << "  "
         << s.Format(sol.values[i]) << "\n";
  }
  text << "optimal:";
  for (std::size_t i : sol.optimal) text << " " << Tuple(*p.system, sol.TupleAt(i));
  text << "\n";
  r.text = text.str();
  return r;
}

RunReport Translate(const CommandRequest& req) {
  Problem p = LoadProblem(Require(req.problem, "--problem", "translate"));
  MappingPtr alpha = LoadMapping(Require(req.mapping, "--mapping", "translate"));
  Problem q = softabs::Translate(*alpha, p);
  RunReport r;
  r.payload = {{"problem", ProblemToJson(q)},
               {"endpoints", alpha->PreservesEndpoints()}};
  r.text = ProblemToJson(q).dump(2) + "\n";
  if (!alpha->PreservesEndpoints()) {
    r.text += "warning: mapping does not preserve 0 and 1\n";
  }
  return r;
}

RunReport Recover(const CommandRequest& req) {
  Problem p = LoadProblem(Require(req.problem, "--problem", "recover"));
  MappingPtr alpha = LoadMapping(Require(req.mapping, "--mapping", "recover"));
  RecoveryResult res = RecoverOptima(*alpha, p, req.jobs);
  const Semiring& s = p.semiring();
  const Semiring& t = *alpha->target();
  const ConstraintSystem& sys = *p.system;
  auto assignment = [&](std::size_t i) {
    return AssignmentToJson(sys, p.con, res.concrete.TupleAt(i));
  };
  json abstract = json::array();
  for (std::size_t k = 0; k < res.abstract_optimal.size(); ++k) {
    abstract.push_back({{"assignment", assignment(res.abstract_optimal[k])},
                        {"concrete", s.ToJson(res.concrete_values[k])},
                        {"abstract", t.ToJson(res.abstract_values[k])}});
  }
  json selected = json::array();
  std::ostringstream text;
  text << "guarantee: " << GuaranteeName(res.guarantee) << "\nselected:";
  for (std::size_t k = 0; k < res.selected.size(); ++k) {
    const std::size_t i = res.selected[k];
    selected.push_back({{"assignment", assignment(i)},
                        {"value", s.ToJson(res.concrete.values[i])},
                        {"abstract", t.ToJson(res.abstract.values[i])},
                        {"consistent", static_cast<bool>(res.consistent[k])}});
    text << " " << Tuple(sys, res.concrete.TupleAt(i)) << "="
         << s.Format(res.concrete.values[i]);
  }
  json concrete = json::array();
  for (std::size_t i : res.concrete.optimal) concrete.push_back(assignment(i));
  RunReport r;
  r.payload = {{"guarantee", GuaranteeName(res.guarantee)},
               {"abstract_optimal", std::move(abstract)},
               {"selected", std::move(selected)},
               {"concrete_optimal", std::move(concrete)}};
  text << "\nabstract optima: " << res.abstract_optimal.size() << "\n";
  r.text = text.str();
  return r;
}

std::string ReportText(const PropertyReport& rep, const Semiring& source,
                       const Semiring& target) {
  std::ostringstream text;
  text << rep.property << ": " << VerdictName(rep.verdict);
  if (!rep.reason.empty()) text << " (" << rep.reason << ")";
  text << "\n";
  for (const WitnessEntry& w : rep.witness) {
    const Semiring& s = w.side == Side::kSource ? source : target;
    text << "  " << w.label << " = " << s.Format(w.value) << "\n";
  }
  if (!rep.note.empty()) text << "  " << rep.note << "\n";
  return text.str();
}

RunReport Check(const CommandRequest& req) {
  const std::string& what = Require(req.property, "--property", "check");
  RunReport r;
  if (what == "axioms") {
    SemiringPtr s = LoadSemiring(Require(req.semiring, "--semiring", "check"));
    PropertyReport rep = CheckAxioms(*s, req.budget);
    r.payload = ReportToJson(rep, *s, *s);
    r.text = ReportText(rep, *s, *s);
    r.exit_code = rep.ok() ? 0 : 1;
    return r;
  }
  MappingPtr alpha = LoadMapping(Require(req.mapping, "--mapping", "check"));
  const Semiring& src = *alpha->source();
  const Semiring& tgt = *alpha->target();
  PropertyReport rep;
  json extra = json::object();
  if (what == "sum_of_products") {
    rep = CheckSumOfProducts(*alpha, req.m, req.n, req.budget);
  } else {
    std::optional<PropertyKind> kind = ParsePropertyKind(what);
    if (!kind) throw InputError("unknown property '" + what + "'", "--property");
    MappingPtr gamma;
    if (RequiresAdjoint(*kind)) {
      if (!req.gamma.empty()) {
        gamma = LoadMapping(req.gamma);
      } else {
        AdjointSearch adj = FindUpperAdjoint(alpha);
        if (!adj.pair) {
          throw PreconditionError("no upper adjoint: nothing below " +
                                  tgt.Format(*adj.missing) +
                                  " has a greatest preimage");
        }
        gamma = adj.pair->upper;
        extra = gamma->Descriptor();
      }
    }
    rep = CheckProperty(*alpha, *kind, gamma.get(), req.budget);
  }
  r.payload = ReportToJson(rep, src, tgt);
  r.payload["endpoints"] = alpha->PreservesEndpoints();
  if (!extra.empty()) r.payload["gamma"] = std::move(extra);
  r.text = ReportText(rep, src, tgt);
  if (!alpha->PreservesEndpoints()) {
    r.text += "warning: mapping does not preserve 0 and 1\n";
  }
  r.exit_code = rep.ok() ? 0 : 1;
  return r;
}

RunReport Verify(const CommandRequest& req) {
  const std::string& id = Require(req.theorem, "--theorem", "verify");
  TheoremOptions opts;
  opts.trials = req.trials;
  opts.seed = req.seed;
  opts.jobs = req.jobs;
  opts.budget = req.budget;
  TheoremReport rep = VerifyTheorem(id, opts);
  RunReport r;
  r.payload = TheoremReportToJson(rep);
  r.text = rep.summary + "\n";
  if (rep.reproducer) {
    std::filesystem::path dir = req.out.empty() ? "." : req.out;
    std::filesystem::create_directories(dir);
    std::filesystem::path file = dir / (id + ".reproducer.json");
    std::ofstream(file) << rep.reproducer->dump(2) << "\n";
    r.payload["reproducer_file"] = file.string();
    r.text += "reproducer written to " + file.string() + "\n";
  }
  r.exit_code = rep.report.ok() ? 0 : 1;
  return r;
}

RunReport Bench(const CommandRequest& req) {
  SemiringPtr s = LoadSemiring(req.semiring.empty() ? "weighted" : req.semiring);
  json rows = json::array();
  std::ostringstream text;
  text << "semiring " << s->Name() << ", jobs " << req.jobs << "\n"
       << "  vars  domain  tuples      seconds\n";
  for (std::size_t vars : {4, 6, 8, 10}) {
    RandomProblemOptions o;
    o.min_vars = o.max_vars = vars;
    o.min_domain = o.max_domain = 4;
    o.max_constraints = vars + 2;
    const std::size_t count = std::max<std::size_t>(1, std::min<std::size_t>(req.trials, 5));
    double total = 0;
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = TrialRng(req.seed, vars * 1000 + i);
      Problem p = RandomProblem(s, rng, o);
      auto t0 = std::chrono::steady_clock::now();
      softabs::Solve(p, req.jobs);
      total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                   .count();
    }
    const double mean = total / static_cast<double>(count);
    const std::size_t tuples = TupleCount(4, vars);
    rows.push_back({{"vars", vars}, {"domain", 4}, {"tuples", tuples},
                    {"instances", count}, {"mean_seconds", mean}});
    char line[96];
    std::snprintf(line, sizeof line, "  %4zu  %6d  %8zu  %11.6f\n", vars, 4,
                  tuples, mean);
    text << line;
  }
  RunReport r;
  r.payload = {{"semiring", s->Name()}, {"rows", std::move(rows)}};
  r.text = text.str();
  return r;
}

}  // namespace

Budget ParseBudget(std::string_view spec, Budget base) {
  while (!spec.empty()) {
    const std::size_t comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? "" : spec.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("budget items look like key=value, got '" +
                           std::string(item) + "'",
                       "--budget");
    }
    std::string_view key = item.substr(0, eq);
    const std::uint64_t v = ParseCount(key, item.substr(eq + 1));
    if (key == "samples") {
      base.samples = v;
    } else if (key == "set_pool") {
      base.set_pool = v;
    } else if (key == "set_size") {
      base.set_size = v;
    } else if (key == "max_evaluations") {
      base.max_evaluations = v;
    } else if (key == "seed") {
      base.seed = v;
    } else {
      throw InputError("unknown budget key '" + std::string(key) + "'",
                       "--budget");
    }
  }
  return base;
}

RunReport Run(const CommandRequest& req) {
  const auto t0 = std::chrono::steady_clock::now();
  RunReport r;
  try {
    if (req.command == "solve") {
      r = Solve(req);
    } else if (req.command == "translate") {
      r = Translate(req);
    } else if (req.command == "recover") {
      r = Recover(req);
    } else if (req.command == "check") {
      r = Check(req);
    } else if (req.command == "verify") {
      r = Verify(req);
    } else if (req.command == "bench") {
      r = Bench(req);
    } else {
      throw InputError("unknown command '" + req.command + "'");
    }
  } catch (const InputError& e) {
    r = RunReport{};
    r.payload = {{"error", e.what()}};
    if (!e.location().empty()) r.payload["location"] = e.location();
    r.text = "error: " + std::string(e.what()) + "\n";
    r.exit_code = 2;
  } catch (const Error& e) {
    r = RunReport{};
    r.payload = {{"error", e.what()}};
    r.text = "error: " + std::string(e.what()) + "\n";
    r.exit_code = 2;
  }
  r.payload["command"] = req.command;
  r.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace softabs::cli
