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
// Symmetrized Hamming-weight cost
//
//   h(w) = (q/2) w (n-w)(n-w-1) + (1/2) w (w-1)(n-w) + (1/6) w (w-1)(w-2)
//
// for bit strings of length n and integer q >= 3. Each term is integral:
// (n-w)(n-w-1) and w(w-1) are products of consecutive integers and
// w(w-1)(w-2) is divisible by 6. Evaluated in exact integer arithmetic with
// the divisibility asserted.

#pragma once

#include <cstdint>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/reduced_model.hpp"

namespace qsrt {

inline std::int64_t hamming_cost(int w, int n, int q) {
  if (w < 0 || w > n) throw DomainError("hamming_cost: w outside [0, n]");
  if (q < 3) throw DomainError("hamming_cost: q < 3");
  auto exact_div = [](std::int64_t num, std::int64_t den) {
    if (num % den != 0) throw DomainError("hamming_cost: non-integral term");
    return num / den;
  };
  std::int64_t W = w, M = n - w, Q = q;
  std::int64_t t1 = exact_div(Q * W * M * (M - 1), 2);
  std::int64_t t2 = exact_div(W * (W - 1) * M, 2);
  std::int64_t t3 = exact_div(W * (W - 1) * (W - 2), 6);
  return t1 + t2 + t3;
}

// Level profile of the cost over n-bit strings: value h(w), degeneracy C(n,w).
inline std::vector<Level> hamming_levels(int n, int q) {
  if (n < 1 || n > 62) throw DomainError("hamming_levels: n outside [1, 62]");
  std::vector<Level> lv;
  std::int64_t binom = 1;
  for (int w = 0; w <= n; ++w) {
    lv.push_back({double(hamming_cost(w, n, q)), binom});
    binom = binom * (n - w) / (w + 1);
  }
  return lv;
}

}  // namespace qsrt
