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
// Closed-form spectral gaps of the standard adiabatic interpolations used by
// the gap scans, plus the golden-section minimizer that refines scanned
// minima.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>

#include "qsrt/errors.hpp"

namespace qsrt {
namespace adiabatic {

// Gap of (1-s) H0 + s HP for a single marked item over N states:
// sqrt((1-2s)^2 + (4/N) s (1-s)); minimum 1/sqrt(N) at s = 1/2.
inline double gap_search_analytic(std::int64_t N, double s) {
  if (N < 2) throw DomainError("gap_search_analytic: N < 2");
  if (s < 0.0 || s > 1.0) throw DomainError("gap_search_analytic: s outside [0,1]");
  return std::sqrt((1.0 - 2.0 * s) * (1.0 - 2.0 * s) +
                   4.0 / double(N) * s * (1.0 - s));
}

// Nontrivial eigenvalue pair for N_q marked items:
// lambda_pm = (-1 ± sqrt((2s-1)^2 - 4 (Nq/N) s (s-1)))/2.
inline std::pair<double, double> gap_multimarked(std::int64_t N, std::int64_t Nq,
                                                 double s) {
  if (Nq < 1 || Nq >= N) throw DomainError("gap_multimarked: need 1 <= Nq < N");
  double f = double(Nq) / double(N);
  double root = std::sqrt((2.0 * s - 1.0) * (2.0 * s - 1.0) -
                          4.0 * f * s * (s - 1.0));
  return {(-1.0 - root) / 2.0, (-1.0 + root) / 2.0};
}

// Minimum gap and its location for the flattened-spectrum problem
// HP = (n-1)(I - |y><y|):
//   gap_min = (2(n-1)/N) sqrt((N-1) N / (n^2 N - 4(n-1)))
//   s*      = (n N - 2(n-1)) / (n^2 N - 4(n-1))
inline std::pair<double, double> gap_case_c(int n) {
  double N = std::pow(2.0, n);
  double den = double(n) * double(n) * N - 4.0 * (n - 1.0);
  double gap = 2.0 * (n - 1.0) / N * std::sqrt((N - 1.0) * N / den);
  double s_star = (double(n) * N - 2.0 * (n - 1.0)) / den;
  return {gap, s_star};
}

struct FirstStepGap {
  double min_gap = 0.0;
  double s_star = 0.0;
  bool interior_minimum = true;  // false: gap is monotone on [0, 1]
};

// First chain step H0 -> H1: gap(s) = sqrt(1 - 4 s (1-x)^2 + 4 s^2 (1-x)^3),
// x = N1/N; interior minimum sqrt(N1/N) at s = N / (2 (N - N1)) when that
// point lies inside [0, 1], otherwise the gap decreases monotonically and the
// minimum sits at s = 1.
inline FirstStepGap first_step_gap(std::int64_t N, std::int64_t N1) {
  if (N1 < 1 || N1 >= N) throw DomainError("first_step_gap: need 1 <= N1 < N");
  double x = double(N1) / double(N);
  double s_star = 1.0 / (2.0 * (1.0 - x));
  FirstStepGap out;
  if (s_star <= 1.0) {
    out.min_gap = std::sqrt(x);
    out.s_star = s_star;
    out.interior_minimum = true;
  } else {
    double u = 1.0 - x;
    out.min_gap = std::sqrt(1.0 - 4.0 * u * u + 4.0 * u * u * u);
    out.s_star = 1.0;
    out.interior_minimum = false;
  }
  return out;
}

inline double first_step_gap_curve(std::int64_t N, std::int64_t N1, double s) {
  double u = 1.0 - double(N1) / double(N);
  return std::sqrt(1.0 - 4.0 * s * u * u + 4.0 * s * s * u * u * u);
}

// Golden-section minimization of a unimodal function on [a, b].
inline double golden_minimize(const std::function<double(double)>& f, double a,
                              double b, double tol = 1e-10) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return (a + b) / 2.0;
}

}  // namespace adiabatic
}  // namespace qsrt
