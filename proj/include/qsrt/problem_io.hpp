// Copyright 2026 The qsrtsim Authors
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
// Problem-instance interchange document:
//   { "kind": ..., "n": ..., "N": ..., "levels": [{"value","degeneracy"}...],
//     "params": { ... } }
// This is the format the CLI subcommands exchange.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsrt/errors.hpp"
#include "qsrt/factoring.hpp"
#include "qsrt/hamming.hpp"
#include "qsrt/minimum_finding.hpp"
#include "qsrt/reduced_model.hpp"

namespace qsrt {

struct ProblemDocument {
  std::string kind;  // search | flat | minfind | factoring | hamming | levels
  int n = 0;
  std::int64_t N = 0;
  std::vector<Level> levels;   // diagonal profile of the problem operator
  nlohmann::json params;       // kind-specific parameters
};

inline nlohmann::json to_json(const ProblemDocument& doc) {
  nlohmann::json j;
  j["kind"] = doc.kind;
  j["n"] = doc.n;
  j["N"] = doc.N;
  j["levels"] = nlohmann::json::array();
  for (const auto& l : doc.levels)
    j["levels"].push_back({{"value", l.value}, {"degeneracy", l.degeneracy}});
  j["params"] = doc.params.is_null() ? nlohmann::json::object() : doc.params;
  return j;
}

inline ProblemDocument problem_from_json(const nlohmann::json& j) {
  static const std::vector<std::string> known = {"kind", "n", "N", "levels",
                                                 "params"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const auto& k : known)
      if (it.key() == k) ok = true;
    if (!ok) throw ConfigInvalidError("unknown problem field: " + it.key());
  }
  ProblemDocument doc;
  doc.kind = j.at("kind").get<std::string>();
  doc.n = j.value("n", 0);
  doc.N = j.value("N", std::int64_t(0));
  if (j.contains("levels"))
    for (const auto& l : j.at("levels"))
      doc.levels.push_back(
          {l.at("value").get<double>(), l.at("degeneracy").get<std::int64_t>()});
  doc.params = j.value("params", nlohmann::json::object());
  return doc;
}

// Canonical documents for the built-in families. `search` is the standard
// single/multi-marked problem, `flat` its flattened-spectrum variant with the
// excited level at n-1.
inline ProblemDocument make_problem(const std::string& kind, int n,
                                    const nlohmann::json& params) {
  ProblemDocument doc;
  doc.kind = kind;
  doc.n = n;
  doc.N = std::int64_t(1) << n;
  doc.params = params;
  if (kind == "search") {
    std::int64_t nq = params.value("Nq", std::int64_t(1));
    doc.levels = {{0.0, nq}, {1.0, doc.N - nq}};
  } else if (kind == "flat") {
    doc.levels = {{0.0, 1}, {double(n - 1), doc.N - 1}};
  } else if (kind == "minfind") {
    doc.levels = minfind_levels(n);
  } else if (kind == "factoring") {
    std::int64_t Z = params.at("Z").get<std::int64_t>();
    std::int64_t a = params.at("a").get<std::int64_t>();
    int qubits = n > 0 ? n : default_factoring_qubits(Z);
    FactoringInstance inst = build_factoring(Z, a, qubits);
    doc.n = qubits;
    doc.N = inst.N;
    doc.levels = inst.value_levels();
  } else if (kind == "hamming") {
    int q = params.value("q", 3);
    doc.levels = hamming_levels(n, q);
    doc.N = 0;
    for (const auto& l : doc.levels) doc.N += l.degeneracy;
  } else {
    throw ConfigInvalidError("unknown problem kind: " + kind);
  }
  return doc;
}

}  // namespace qsrt
