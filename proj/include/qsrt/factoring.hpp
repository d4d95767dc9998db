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
// Order finding as a nested search: the table h_k = a^k mod Z is periodic
// with the order r of a, its ground manifold {k : h_k = 1} = {0, r, 2r, ...}.
// A halving division set v_1 = floor(Z/2), v_{j+1} = floor(v_j / 2), ..., 1
// defines marked sets M_j = {k : h_k <= v_j}; levels whose marked set does
// not shrink are dropped. Factors follow from gcd(a^{r/2} +- 1, Z) when r is
// even.

#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/marked_family.hpp"
#include "qsrt/minimum_finding.hpp"

namespace qsrt {

inline std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  std::int64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

struct FactoringInstance {
  std::int64_t Z = 0;
  std::int64_t a = 0;
  int n = 0;
  std::int64_t N = 0;
  OracleTable table;                    // h_k = a^k mod Z
  std::vector<std::int64_t> divisions;  // v_1 > v_2 > ... >= 1 (kept levels)
  MarkedSetFamily family;               // M_j = {k : h_k <= v_j}
  std::vector<std::int64_t> ground_manifold;  // {k : h_k = 1}
  std::int64_t order = 0;                     // r
  std::vector<std::int64_t> factors;          // nontrivial factors when found

  // Degeneracy profile of h over distinct values, ascending by value.
  std::vector<Level> value_levels() const {
    std::vector<std::pair<int, std::int64_t>> counts;
    for (int v : table.values()) {
      bool found = false;
      for (auto& c : counts)
        if (c.first == v) {
          ++c.second;
          found = true;
        }
      if (!found) counts.push_back({v, 1});
    }
    std::sort(counts.begin(), counts.end());
    std::vector<Level> lv;
    for (auto& c : counts) lv.push_back({double(c.first), c.second});
    return lv;
  }
};

inline int default_factoring_qubits(std::int64_t Z) {
  int n = 1;
  while ((std::int64_t(1) << n) < Z) ++n;
  return n;
}

inline FactoringInstance build_factoring(std::int64_t Z, std::int64_t a, int n) {
  if (Z < 3 || a < 1 || a >= Z)
    throw DomainError("factoring: need 1 <= a < Z, Z >= 3");
  if (std::gcd(a, Z) != 1)
    throw NotCoprimeError("gcd(a, Z) = " + std::to_string(std::gcd(a, Z)));
  FactoringInstance inst;
  inst.Z = Z;
  inst.a = a;
  inst.n = n;
  inst.N = std::int64_t(1) << n;
  if (inst.N < Z)
    throw InsufficientQubitsError("2^n < Z");

  std::vector<int> values(std::size_t(inst.N));
  for (std::int64_t k = 0; k < inst.N; ++k)
    values[std::size_t(k)] = int(pow_mod(a, k, Z));
  inst.table = OracleTable(std::move(values));

  for (std::int64_t k = 0; k < inst.N; ++k)
    if (inst.table.value(k) == 1) inst.ground_manifold.push_back(k);
  // order = first nonzero ground index (h_0 = 1 always)
  inst.order = inst.ground_manifold.size() > 1 ? inst.ground_manifold[1]
                                               : 1;

  // halving division set; duplicate marked-set sizes are dropped
  std::vector<std::int64_t> divisions, sizes;
  std::int64_t prev_size = inst.N;
  for (std::int64_t v = Z / 2; v >= 1; v /= 2) {
    std::int64_t size = inst.table.count_at_most(int(v));
    if (size < prev_size && size >= 1) {
      divisions.push_back(v);
      sizes.push_back(size);
      prev_size = size;
    }
    if (v == 1) break;
  }
  if (divisions.empty()) {
    // a = 1 style edge: all values equal 1, single full level
    divisions.push_back(1);
    sizes.push_back(inst.table.count_at_most(1));
  }
  inst.divisions = divisions;

  const OracleTable& table = inst.table;
  auto divs = divisions;
  inst.family = MarkedSetFamily(
      inst.N, sizes,
      [table, divs](int level, std::int64_t q) {
        return table.value(q) <= int(divs[std::size_t(level - 1)]);
      });

  if (inst.order % 2 == 0) {
    std::int64_t half = pow_mod(a, inst.order / 2, Z);
    std::int64_t g1 = std::gcd(half + 1, Z);
    std::int64_t g2 = std::gcd(half - 1 + Z, Z);
    if (g1 > 1 && g1 < Z) inst.factors.push_back(std::min(g1, Z / g1));
    if (g2 > 1 && g2 < Z) inst.factors.push_back(std::min(g2, Z / g2));
    std::sort(inst.factors.begin(), inst.factors.end());
    inst.factors.erase(std::unique(inst.factors.begin(), inst.factors.end()),
                       inst.factors.end());
    // report the complementary cofactors as well
    std::vector<std::int64_t> full;
    for (auto f : inst.factors) {
      full.push_back(f);
      if (Z % f == 0 && Z / f != f) full.push_back(Z / f);
    }
    std::sort(full.begin(), full.end());
    full.erase(std::unique(full.begin(), full.end()), full.end());
    inst.factors = full;
  }
  return inst;
}

}  // namespace qsrt
