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
// JSON forms of semirings, mappings, problems and reports.
//
// Problem:
//   {"system": {"semiring": <descriptor>, "domain": [names],
//               "variables": [names]},
//    "con": [names],
//    "constraints": [{"scope": [names], "fill": value,
//                     "entries": [[[domain names], value], ...]}]}
// "fill" defaults every tuple not listed in "entries"; without it the
// entries must cover the whole table. Output is canonical: fill is the zero
// and only non-zero entries are listed, in tuple order.

#ifndef SOFTABS_JSON_IO_H_
#define SOFTABS_JSON_IO_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "softabs/mapping.h"
#include "softabs/report.h"
#include "softabs/scsp.h"

namespace softabs {

// Throws InputError on unreadable files or malformed JSON.
nlohmann::json ReadJsonFile(const std::filesystem::path& path);

// Mapping descriptors mirror Mapping::Descriptor(): "kind", "source",
// "target", plus "pairs" | "theta","low","high" | "index" | "blocks" |
// "maps". A natural map may omit "target"; the quotient is built from the
// blocks.
MappingPtr ParseMapping(const nlohmann::json& j, const std::string& where = "");

Problem ParseProblem(const nlohmann::json& j, const std::string& where = "");
nlohmann::json ProblemToJson(const Problem& p);

nlohmann::json SolutionToJson(const Problem& p, const SolutionTable& sol);
nlohmann::json AssignmentToJson(const ConstraintSystem& sys, const Scope& scope,
                                const Assignment& t);

// Witness values are rendered in their own carrier.
nlohmann::json ReportToJson(const PropertyReport& r, const Semiring& source,
                            const Semiring& target);

}  // namespace softabs

#endif  // SOFTABS_JSON_IO_H_
