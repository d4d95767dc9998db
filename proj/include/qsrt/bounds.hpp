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
// First-order error bounds of one resonant-transition step. With the pulse
// t = pi / (2 c d0) and gaps large against c d0, the total leaked population
// obeys
//
//   sum_j (p_1j + p_0j) <= a^2 c^2
//   a^2 c^2 = (4 c^2 (1 - d0^2) / pi^2) [ 1/(gap_curr/(c d0) - 1)^2
//                                       + 1/(alpha gap_prev/(c d0) - 1)^2 ],
//
// and the multi-step success probability satisfies
// P_succ >= (1 - (a_max c)^2)^m, which exceeds 1/e in the asymptotic limit
// when a_max c < 1/sqrt(m). At finite m the bound sits slightly below 1/e
// ((1 - 1/m)^m < 1/e); finite values are reported verbatim.

#pragma once

#include <cmath>

#include "qsrt/errors.hpp"

namespace qsrt {
namespace engine {

inline double leakage_bound(double gap_prev, double gap_curr, double d0,
                            double alpha, double c) {
  double cd0 = c * d0;
  if (!(gap_curr > cd0) || !(alpha * gap_prev > cd0))
    throw AssumptionViolatedError("leakage_bound: gaps not large against c d0");
  double term_curr = 1.0 / std::pow(gap_curr / cd0 - 1.0, 2);
  double term_prev = 1.0 / std::pow(alpha * gap_prev / cd0 - 1.0, 2);
  return 4.0 * c * c * (1.0 - d0 * d0) / (M_PI * M_PI) *
         (term_curr + term_prev);
}

inline double success_bound(double a_max, double c, int steps) {
  if (a_max * c >= 1.0) throw DomainError("success_bound: a_max * c >= 1");
  if (steps < 0) throw DomainError("success_bound: negative step count");
  return std::pow(1.0 - (a_max * c) * (a_max * c), steps);
}

}  // namespace engine
}  // namespace qsrt
