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
// Protocol chains for the structured search families, built in the exact
// class-symmetric register basis. Every chain Hamiltonian is a rank-one term
// plus a class-diagonal, so the joint dynamics of the full 2^n-dimensional
// register are reproduced exactly by a register of dimension equal to the
// class count. Per-step parameters follow the family's alpha rule
// alpha_j = (E-^(j) - 1) / E-^(j-1) with omega = 1 at resonance.

#pragma once

#include <cmath>
#include <vector>

#include "qsrt/factoring.hpp"
#include "qsrt/marked_family.hpp"
#include "qsrt/minimum_finding.hpp"
#include "qsrt/qsrt_engine.hpp"
#include "qsrt/reduced_model.hpp"
#include "qsrt/spectral.hpp"

namespace qsrt {
namespace engine {

// Class-basis operator: rank_one |psi0><psi0| + per-class diagonal over the
// shared partition `class_sizes`.
inline HermitianOperator class_operator(const std::vector<std::int64_t>& sizes,
                                        const std::vector<double>& diag,
                                        double rank_one) {
  std::vector<Level> lv;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    lv.push_back({diag[i], sizes[i]});
  return HermitianOperator(class_matrix(lv, rank_one).cast<Complex>());
}

// Ground state of -|psi0><psi0| in the class basis: sqrt(N_a / N).
inline ComplexState class_uniform(const std::vector<std::int64_t>& sizes) {
  std::int64_t N = 0;
  for (auto s : sizes) N += s;
  Vector v(long(sizes.size()));
  for (std::size_t i = 0; i < sizes.size(); ++i)
    v(long(i)) = Complex(std::sqrt(double(sizes[i]) / double(N)), 0.0);
  return ComplexState(std::move(v));
}

struct FamilyChainOptions {
  double omega_min = 0.95;
  double omega_max = 1.05;
  double d0_floor = 0.5;  // lower clamp on the per-step overlap estimate
};

// Chain through the intermediate Hamiltonians of a nested marked-set family.
// `marked_classes(j)` must say whether a class is inside M_j; the class
// partition has to refine every marked set.
inline Chain family_chain(const std::vector<std::int64_t>& class_sizes,
                          const std::vector<std::vector<bool>>& marked_classes,
                          std::int64_t N, const FamilyChainOptions& opt = {}) {
  Chain chain;
  chain.initial = class_operator(class_sizes,
                                 std::vector<double>(class_sizes.size(), 0.0),
                                 -1.0);
  chain.initial_ground = class_uniform(class_sizes);
  chain.initial_energy = -1.0;

  double e_prev = -1.0;
  double d0_prev_x = -1.0;  // previous level fraction, -1 before level 1
  for (const auto& marks : marked_classes) {
    std::int64_t nj = 0;
    for (std::size_t i = 0; i < class_sizes.size(); ++i)
      if (marks[i]) nj += class_sizes[i];
    double x = double(nj) / double(N);
    auto [e_minus, e_plus] = intermediate_eigenvalues(x);
    (void)e_plus;
    ChainStep step;
    std::vector<double> diag(class_sizes.size(), 0.0);
    for (std::size_t i = 0; i < class_sizes.size(); ++i)
      if (marks[i]) diag[i] = -(1.0 - x);
    step.hamiltonian = class_operator(class_sizes, diag, -x);
    step.alpha = (e_minus - 1.0) / e_prev;
    step.omega_min = opt.omega_min;
    step.omega_max = opt.omega_max;
    step.exact_ground_energy = e_minus;
    // overlap estimate from the closed-form ground components
    double d0;
    if (d0_prev_x < 0.0) {
      auto [x1, x2] = intermediate_ground_components(x);
      d0 = x1 * std::sqrt(x) + x2 * std::sqrt(1.0 - x);
    } else {
      auto [x1p, x2p] = intermediate_ground_components(d0_prev_x);
      auto [x1c, x2c] = intermediate_ground_components(x);
      double np = d0_prev_x * double(N), nc = x * double(N);
      d0 = std::sqrt(nc / np) * x1p * x1c +
           (np - nc) / std::sqrt(np * (double(N) - nc)) * x1p * x2c +
           std::sqrt((double(N) - np) / (double(N) - nc)) * x2p * x2c;
    }
    step.d0_estimate = std::max(opt.d0_floor, d0);
    chain.steps.push_back(std::move(step));
    e_prev = e_minus;
    d0_prev_x = x;
  }
  return chain;
}

// Minimum finding: classes are the oracle-value groups, level j marks the
// classes with value below n - j.
inline Chain minfind_chain(const MinFindInstance& inst,
                           const FamilyChainOptions& opt = {}) {
  std::vector<std::int64_t> sizes;
  for (const auto& l : inst.value_levels) sizes.push_back(l.degeneracy);
  std::vector<std::vector<bool>> marks;
  for (int j = 1; j <= inst.n - 1; ++j) {
    std::vector<bool> m;
    for (const auto& l : inst.value_levels)
      m.push_back(l.value < double(inst.n - j));
    marks.push_back(std::move(m));
  }
  return family_chain(sizes, marks, inst.N, opt);
}

// Factoring: classes are the distinct residue values, level j marks values
// at most v_j.
inline Chain factoring_chain(const FactoringInstance& inst,
                             const FamilyChainOptions& opt = {}) {
  std::vector<Level> lv = inst.value_levels();
  std::vector<std::int64_t> sizes;
  for (const auto& l : lv) sizes.push_back(l.degeneracy);
  std::vector<std::vector<bool>> marks;
  for (std::size_t j = 0; j < inst.divisions.size(); ++j) {
    std::vector<bool> m;
    for (const auto& l : lv)
      m.push_back(l.value <= double(inst.divisions[j]));
    marks.push_back(std::move(m));
  }
  return family_chain(sizes, marks, inst.N, opt);
}

// Single-step general search: one marked class of size Nq, the problem
// Hamiltonian itself as the only chain element (alpha = 2 puts the resonance
// at omega = 1).
inline Chain search_single_step_chain(std::int64_t N, std::int64_t Nq,
                                      double window_linewidths,
                                      double coupling) {
  std::vector<std::int64_t> sizes = {Nq, N - Nq};
  Chain chain;
  chain.initial = class_operator(sizes, {0.0, 0.0}, -1.0);
  chain.initial_ground = class_uniform(sizes);
  chain.initial_energy = -1.0;
  ChainStep step;
  step.hamiltonian = class_operator(sizes, {-1.0, 0.0}, 0.0);
  step.alpha = 2.0;
  step.d0_estimate = std::sqrt(double(Nq) / double(N));
  double lw = 2.0 * coupling * step.d0_estimate;
  step.omega_min = 1.0 - window_linewidths * lw;
  step.omega_max = 1.0 + window_linewidths * lw;
  step.exact_ground_energy = -1.0;
  chain.steps.push_back(std::move(step));
  return chain;
}

// Two-step search through H1 = H(s = 1/2).
inline Chain search_two_step_chain(std::int64_t N, double omega_min = 0.9,
                                   double omega_max = 1.1) {
  std::vector<std::int64_t> sizes = {1, N - 1};
  double rn = std::sqrt(double(N));
  double e0_h1 = -0.5 - 0.5 / rn;  // ground of H(1/2)
  Chain chain;
  chain.initial = class_operator(sizes, {0.0, 0.0}, -1.0);
  chain.initial_ground = class_uniform(sizes);
  chain.initial_energy = -1.0;

  ChainStep s1;
  s1.hamiltonian = class_operator(sizes, {-0.5, 0.0}, -0.5);
  s1.alpha = 1.0 - e0_h1;
  s1.omega_min = omega_min;
  s1.omega_max = omega_max;
  s1.exact_ground_energy = e0_h1;
  s1.d0_estimate = std::sqrt(0.5 * (1.0 + 1.0 / rn));
  chain.steps.push_back(std::move(s1));

  ChainStep s2;
  s2.hamiltonian = class_operator(sizes, {-1.0, 0.0}, 0.0);
  s2.alpha = 4.0 * rn / (rn + 1.0);
  s2.omega_min = omega_min;
  s2.omega_max = omega_max;
  s2.exact_ground_energy = -1.0;
  s2.d0_estimate = std::max(0.5, std::sqrt(0.5 * (1.0 + 1.0 / rn)));
  chain.steps.push_back(std::move(s2));
  return chain;
}

}  // namespace engine
}  // namespace qsrt
