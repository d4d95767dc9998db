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
// Exact 3x3 reduction of the adiabatic interpolation between two adjacent
// nested-search Hamiltonians,
//
//   H(s) = (1-s) H_{j-1} + s H_j.
//
// In the basis spanned by the symmetric vector over M_j, the symmetric vector
// over M_{j-1} \ M_j, and the complement vector q_{j-1}-perp, H(s) equals
//
//   [[ a Nj,          a sqrt(m Nj),   (a+b) sqrt(Nj) ]
//    [ a sqrt(m Nj),  m a + d,        (a+b) sqrt(m)  ]   +  v I3,
//    [ (a+b) sqrt(Nj),(a+b) sqrt(m),  a + g          ]]
//
// with t = (1-s) N_{j-1}/N + s N_j/N, a = -t/N, b = -t(sqrt(N-N_{j-1})-1)/N,
// g = 1 - 2t + t (N_{j-1}+1)/N, v = -1 + t, d = s (1 - N_j/N), and
// m = N_{j-1} - N_j. Deflated eigenvalues: v with multiplicity N_j - 1,
// v + d with multiplicity m - 1, and 0 with multiplicity N - N_{j-1} - 1.
// At s = 1 the 3x3 spectrum is {0, -1/2 ± (1/2) sqrt(1 - 4x + 8x^2 - 4x^3)}
// with x = N_j/N; at s = 0 it contains both 2x2 eigenvalues of H_{j-1}.

#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/reduced_model.hpp"

namespace qsrt {

struct StepPairReduction {
  Eigen::Matrix3d matrix;        // effective 3x3 block
  std::vector<Level> deflated;   // eigenvalues outside the block
  double nu = 0.0;
  double delta = 0.0;
};

// Fraction-parameterized coefficients; exact for integer sizes and also valid
// for real fractions (used by the asymptotic gap scans).
inline Eigen::Matrix3d step_pair_matrix(double f_prev, double f, double s,
                                        double N) {
  double tau = (1.0 - s) * f_prev + s * f;
  double Nprev = f_prev * N;
  double Nj = f * N;
  double m = Nprev - Nj;
  double alpha = -tau / N;
  double ab = -tau * std::sqrt(N - Nprev) / N;  // alpha + beta
  double gamma = 1.0 - 2.0 * tau + tau * (Nprev + 1.0) / N;
  double nu = -1.0 + tau;
  double delta = s * (1.0 - f);
  Eigen::Matrix3d M;
  M(0, 0) = alpha * Nj;
  M(0, 1) = alpha * std::sqrt(m * Nj);
  M(0, 2) = ab * std::sqrt(Nj);
  M(1, 0) = M(0, 1);
  M(1, 1) = m * alpha + delta;
  M(1, 2) = ab * std::sqrt(m);
  M(2, 0) = M(0, 2);
  M(2, 1) = M(1, 2);
  M(2, 2) = alpha + gamma;
  M += nu * Eigen::Matrix3d::Identity();
  return M;
}

inline StepPairReduction reduce_step_pair(std::int64_t N, std::int64_t Nprev,
                                          std::int64_t Nj, double s) {
  if (!(N > Nprev && Nprev > Nj && Nj >= 1))
    throw OrderingViolationError("reduce_step_pair: need N > N_{j-1} > N_j >= 1");
  if (s < 0.0 || s > 1.0) throw DomainError("reduce_step_pair: s outside [0,1]");
  StepPairReduction r;
  r.matrix = step_pair_matrix(double(Nprev) / double(N), double(Nj) / double(N),
                              s, double(N));
  double tau = (1.0 - s) * double(Nprev) / double(N) + s * double(Nj) / double(N);
  r.nu = -1.0 + tau;
  r.delta = s * (1.0 - double(Nj) / double(N));
  std::int64_t m = Nprev - Nj;
  if (Nj > 1) r.deflated.push_back({r.nu, Nj - 1});
  if (m > 1) r.deflated.push_back({r.nu + r.delta, m - 1});
  if (N - Nprev - 1 > 0) r.deflated.push_back({0.0, N - Nprev - 1});
  return r;
}

// Full spectrum of H(s): 3x3 block plus deflated values, ascending.
inline std::vector<double> step_pair_spectrum(std::int64_t N, std::int64_t Nprev,
                                              std::int64_t Nj, double s) {
  StepPairReduction r = reduce_step_pair(N, Nprev, Nj, s);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(r.matrix,
                                                    Eigen::EigenvaluesOnly);
  std::vector<double> all(es.eigenvalues().data(), es.eigenvalues().data() + 3);
  for (const auto& l : r.deflated)
    all.insert(all.end(), std::size_t(l.degeneracy), l.value);
  std::sort(all.begin(), all.end());
  return all;
}

// Printed special case N_j / N_{j-1} = 1/10, f = N_j / N; equals
// step_pair_matrix(10 f, f, s, N) for any consistent N.
inline Eigen::Matrix3d stepwise_matrix_ratio10(double f, double s) {
  double r = 9.0 * s - 10.0;
  double root = std::sqrt(1.0 - 10.0 * f);
  Eigen::Matrix3d M;
  M(0, 0) = f * (f - 1.0) * r - 1.0;
  M(0, 1) = 3.0 * f * f * r;
  M(0, 2) = std::pow(f, 1.5) * root * r;
  M(1, 0) = M(0, 1);
  M(1, 1) = f * (81.0 * f * s - 90.0 * f - 10.0 * s + 10.0) + s - 1.0;
  M(1, 2) = 3.0 * std::pow(f, 1.5) * root * r;
  M(2, 0) = M(0, 2);
  M(2, 1) = M(1, 2);
  M(2, 2) = f * (1.0 - 10.0 * f) * r;
  return M;
}

// General ratio: f_prev = f / ratio.
inline Eigen::Matrix3d stepwise_matrix(double f, double ratio, double s) {
  if (!(f > 0.0 && ratio > 0.0 && ratio < 1.0 && f / ratio < 1.0))
    throw DomainError("stepwise_matrix: need 0 < f, 0 < ratio < 1, f/ratio < 1");
  // N drops out of every entry; any consistent value works
  return step_pair_matrix(f / ratio, f, s, 1.0e12);
}

}  // namespace qsrt
