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
// Minimum finding over an unsorted table with a geometric value profile:
// W holds N = 2^n entries with integer values in [0, n-1], N/2 + 1 entries of
// value n-1, N/2^j of value n-j for 2 <= j <= n-1, and a single entry of 0.
// The task is the index y of the zero entry. A division set v_j = n - j
// defines nested marked sets M_j = {k : h_k < v_j} whose sizes are obtained
// by direct counting over the profile. The last set is {y}.

#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/marked_family.hpp"
#include "qsrt/reduced_model.hpp"

namespace qsrt {

// Value table h_k, stored as per-class counts plus the index assignment.
class OracleTable {
 public:
  OracleTable() = default;
  // values[k] = h_k
  explicit OracleTable(std::vector<int> values) : values_(std::move(values)) {}

  std::int64_t size() const { return std::int64_t(values_.size()); }
  int value(std::int64_t k) const { return values_[std::size_t(k)]; }
  const std::vector<int>& values() const { return values_; }

  std::int64_t count_below(int threshold) const {
    std::int64_t c = 0;
    for (int v : values_)
      if (v < threshold) ++c;
    return c;
  }

  std::int64_t count_at_most(int threshold) const {
    std::int64_t c = 0;
    for (int v : values_)
      if (v <= threshold) ++c;
    return c;
  }

 private:
  std::vector<int> values_;
};

struct MinFindInstance {
  int n = 0;                 // qubits
  std::int64_t N = 0;        // 2^n
  OracleTable table;         // value profile over indices
  MarkedSetFamily family;    // M_j = {k : h_k < n - j}, j = 1..n-1
  std::int64_t target = 0;   // y, the unique index with value 0
  std::vector<Level> value_levels;  // (value, count) pairs, value descending

  ReducedModel problem_hamiltonian() const {
    // H_P = -|y><y| over the value classes
    std::vector<Level> lv;
    for (const auto& l : value_levels)
      lv.push_back({l.value == 0.0 ? -1.0 : 0.0, l.degeneracy});
    return ReducedModel(std::move(lv), 0.0);
  }
};

// Profile counts per value: count(n-1) = N/2 + 1, count(n-j) = N/2^j for
// 2 <= j <= n-1, count(0) = 1.
inline std::vector<Level> minfind_levels(int n) {
  if (n < 3) throw InvalidSizeError("minfind: n < 3");
  std::int64_t N = std::int64_t(1) << n;
  std::vector<Level> lv;
  lv.push_back({double(n - 1), N / 2 + 1});
  for (int j = 2; j <= n - 1; ++j) lv.push_back({double(n - j), N >> j});
  lv.push_back({0.0, 1});
  std::int64_t sum = 0;
  for (const auto& l : lv) sum += l.degeneracy;
  if (sum != N) throw InvalidSizeError("minfind profile does not total N");
  return lv;
}

// Builds the table, the nested family, and the target index. With
// permute_seed == 0 values are laid out descending (y = N - 1); otherwise the
// assignment is shuffled deterministically.
inline MinFindInstance build_minfind(int n, std::uint64_t permute_seed = 0) {
  MinFindInstance inst;
  inst.n = n;
  inst.N = std::int64_t(1) << n;
  inst.value_levels = minfind_levels(n);

  std::vector<int> values;
  values.reserve(std::size_t(inst.N));
  for (const auto& l : inst.value_levels)
    values.insert(values.end(), std::size_t(l.degeneracy), int(l.value));
  if (permute_seed != 0) {
    std::mt19937_64 rng(permute_seed);
    std::shuffle(values.begin(), values.end(), rng);
  }
  inst.table = OracleTable(std::move(values));

  for (std::int64_t k = 0; k < inst.N; ++k)
    if (inst.table.value(k) == 0) inst.target = k;

  std::vector<std::int64_t> sizes;
  for (int j = 1; j <= n - 1; ++j)
    sizes.push_back(inst.table.count_below(n - j));

  const OracleTable& table = inst.table;
  int nn = n;
  inst.family = MarkedSetFamily(
      inst.N, std::move(sizes),
      [table, nn](int level, std::int64_t q) { return table.value(q) < nn - level; });
  return inst;
}

}  // namespace qsrt
