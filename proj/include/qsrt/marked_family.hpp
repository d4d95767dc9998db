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
// Nested marked-set search structure. A family M_1 ⊃ M_2 ⊃ ... ⊃ M_m of
// marked sets over a universe of N items defines the interpolating chain
//
//   H_j = (N_j/N) H_0 + (1 - N_j/N) H_{P_j},    H_{P_j} = -Σ_{q∈M_j} |q><q|,
//
// with H_0 = -|psi0><psi0|. In the orthonormal basis (m_j, q_j-perp), where
// m_j is the normalized symmetric marked vector, H_j restricts to a 2x2 block
// whose eigenvalues are E± = (-1 ± ΔE_j)/2 with
//
//   ΔE_j = sqrt((1 - 2x)^2 + 4 x^2 (1 - x)),   x = N_j / N,
//
// minimized at x = 1/3 with value sqrt(11)/(3 sqrt(3)) ≈ 0.638. The remaining
// marked-sector eigenvalue -(1-x) is (N_j - 1)-fold degenerate and the
// complement contributes N - N_j - 1 zeros.

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/reduced_model.hpp"

namespace qsrt {

// Marked sets stored as a predicate plus cached sizes; explicit index lists
// are never materialized, so universes up to 2^30 stay cheap.
class MarkedSetFamily {
 public:
  using Member = std::function<bool(int level, std::int64_t q)>;

  MarkedSetFamily() = default;
  MarkedSetFamily(std::int64_t universe, std::vector<std::int64_t> sizes,
                  Member member)
      : n_(universe), sizes_(std::move(sizes)), member_(std::move(member)) {
    if (n_ < 2) throw InvalidDimensionError("universe < 2");
    if (sizes_.empty()) throw EmptyLevelsError("no levels");
    // a single full-universe level is the degenerate trivial family
    bool trivial = sizes_.size() == 1 && sizes_[0] == n_;
    std::int64_t prev = n_;
    for (auto s : sizes_) {
      if (s < 1 || (!trivial && s >= prev))
        throw OrderingViolationError("sizes must decrease strictly below N");
      prev = s;
    }
  }

  std::int64_t universe() const { return n_; }
  int depth() const { return int(sizes_.size()); }
  std::int64_t size(int level) const {
    check(level);
    return sizes_[level - 1];
  }
  bool member(int level, std::int64_t q) const {
    check(level);
    return member_(level, q);
  }
  double fraction(int level) const { return double(size(level)) / double(n_); }

 private:
  void check(int level) const {
    if (level < 1 || level > depth())
      throw LevelOutOfRangeError("level " + std::to_string(level));
  }

  std::int64_t n_ = 0;
  std::vector<std::int64_t> sizes_;
  Member member_;
};

// Closed forms of the 2x2 block, x = N_j / N.
inline double intermediate_gap(double x) {
  return std::sqrt((1.0 - 2.0 * x) * (1.0 - 2.0 * x) +
                   4.0 * x * x * (1.0 - x));
}

inline std::pair<double, double> intermediate_eigenvalues(double x) {
  double d = intermediate_gap(x);
  return {(-1.0 - d) / 2.0, (-1.0 + d) / 2.0};
}

// Normalized ground components (x1, x2) in the (m_j, q_j-perp) basis, both
// chosen positive.
inline std::pair<double, double> intermediate_ground_components(double x) {
  double m00 = -(1.0 - x + x * x);
  double m01 = -x * std::sqrt(x * (1.0 - x));
  double e_minus = intermediate_eigenvalues(x).first;
  // eigenvector of [[m00, m01], [m01, m11]] for e_minus
  double v1 = m01;
  double v2 = e_minus - m00;
  double n = std::sqrt(v1 * v1 + v2 * v2);
  if (n == 0.0) return {1.0, 0.0};
  v1 /= n;
  v2 /= n;
  if (v1 < 0.0) {
    v1 = -v1;
    v2 = -v2;
  }
  return {v1, v2};
}

// H_0 = -|psi0><psi0| as a ReducedModel (one class of N zeros, rank-one -1).
inline ReducedModel build_initial(std::int64_t N) {
  if (N < 2) throw InvalidDimensionError("build_initial: N < 2");
  return ReducedModel({{0.0, N}}, -1.0);
}

// H_j of the family as a ReducedModel over {marked, unmarked} classes.
inline ReducedModel build_intermediate(const MarkedSetFamily& family, int j) {
  std::int64_t N = family.universe();
  std::int64_t Nj = family.size(j);
  double x = double(Nj) / double(N);
  std::vector<Level> lv;
  lv.push_back({-(1.0 - x), Nj});
  if (N - Nj > 0) lv.push_back({0.0, N - Nj});
  return ReducedModel(std::move(lv), -x);
}

// Ground-state overlap d0^(j) between adjacent intermediate Hamiltonians,
// assembled from the normalized 2x2 components of both levels.
inline double overlap_adjacent(const MarkedSetFamily& family, int j) {
  if (j < 2 || j > family.depth())
    throw LevelOutOfRangeError("overlap_adjacent: level " + std::to_string(j));
  double N = double(family.universe());
  double Np = double(family.size(j - 1));
  double Nc = double(family.size(j));
  auto [x1p, x2p] = intermediate_ground_components(Np / N);
  auto [x1c, x2c] = intermediate_ground_components(Nc / N);
  return std::sqrt(Nc / Np) * x1p * x1c +
         (Np - Nc) / std::sqrt(Np * (N - Nc)) * x1p * x2c +
         std::sqrt((N - Np) / (N - Nc)) * x2p * x2c;
}

// Overlap of the j-th intermediate ground state with the final marked state
// for a singleton target; proportional to x1 / sqrt(N_j).
inline double overlap_with_target(const MarkedSetFamily& family, int j) {
  double x = family.fraction(j);
  auto [x1, x2] = intermediate_ground_components(x);
  (void)x2;
  return x1 / std::sqrt(double(family.size(j)));
}

}  // namespace qsrt
