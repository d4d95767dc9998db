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
// Exact symmetric-subspace reduction for operators of the form
//
//   H = r |psi0><psi0| + sum_a E_a P_a
//
// where |psi0> is the uniform superposition and P_a projects onto a class of
// N_a basis states sharing the diagonal value E_a. The class-symmetric
// vectors span an invariant subspace of dimension L (the number of classes);
// on it H acts as the L x L matrix
//
//   M_ab = E_a delta_ab + r sqrt(N_a N_b) / N,
//
// and each class additionally contributes N_a - 1 "deflated" eigenvalues E_a
// from the zero-sum complement. Spectra of arbitrarily large instances are
// therefore exact at cost L^3.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdint>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/spectral.hpp"

namespace qsrt {

struct Level {
  double value = 0.0;
  std::int64_t degeneracy = 0;
};

class ReducedModel {
 public:
  ReducedModel() = default;
  ReducedModel(std::vector<Level> levels, double rank_one_coefficient)
      : levels_(std::move(levels)), rank_one_(rank_one_coefficient) {
    if (levels_.empty()) throw EmptyLevelsError("no levels");
    total_ = 0;
    for (const auto& l : levels_) {
      if (l.degeneracy < 1) throw EmptyLevelsError("degeneracy < 1");
      total_ += l.degeneracy;
    }
  }

  const std::vector<Level>& levels() const { return levels_; }
  double rank_one_coefficient() const { return rank_one_; }
  std::int64_t total_dimension() const { return total_; }

  // Classes with equal diagonal value are merged before reduction; the merged
  // effective matrix is minimal and the deflation count stays unambiguous.
  std::vector<Level> merged_levels() const {
    std::vector<Level> sorted = levels_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Level& a, const Level& b) { return a.value < b.value; });
    std::vector<Level> out;
    for (const auto& l : sorted) {
      if (!out.empty() && l.value == out.back().value)
        out.back().degeneracy += l.degeneracy;
      else
        out.push_back(l);
    }
    return out;
  }

  // Effective matrix over normalized class-symmetric vectors (merged classes).
  Eigen::MatrixXd effective() const;

  // Effective matrix over the stored partition without merging. Used when a
  // family of operators must share one basis (e.g. every Hamiltonian of a
  // protocol chain).
  Eigen::MatrixXd effective_unmerged() const;

  // Deflated eigenvalues: value E_a with multiplicity N_a - 1 per merged class.
  std::vector<Level> deflated() const {
    std::vector<Level> out;
    for (const auto& l : merged_levels())
      if (l.degeneracy > 1) out.push_back({l.value, l.degeneracy - 1});
    return out;
  }

  // Full spectrum (ascending, with multiplicity) as effective ∪ deflated.
  std::vector<double> spectrum() const {
    Eigen::VectorXd eff = eigenvalues_only_real(effective());
    std::vector<double> all(eff.data(), eff.data() + eff.size());
    for (const auto& l : deflated())
      all.insert(all.end(), std::size_t(l.degeneracy), l.value);
    std::sort(all.begin(), all.end());
    return all;
  }

  // Two lowest eigenvalues of the full operator.
  std::pair<double, double> two_lowest() const {
    Eigen::VectorXd eff = eigenvalues_only_real(effective());
    double lo = eff(0), hi = eff.size() > 1 ? eff(1) : eff(0);
    bool have_hi = eff.size() > 1;
    for (const auto& l : deflated()) {
      if (l.value < lo) {
        hi = lo;
        lo = l.value;
        have_hi = true;
      } else if (!have_hi || l.value < hi) {
        hi = l.value;
        have_hi = true;
      }
      if (l.degeneracy > 1 && l.value <= hi) hi = l.value;
    }
    return {lo, hi};
  }

  // Dense realization: classes occupy consecutive index blocks.
  HermitianOperator to_dense(long cap = kDefaultDenseCap) const {
    if (total_ > cap)
      throw DimensionCapError("dense dim " + std::to_string(total_) +
                              " exceeds cap " + std::to_string(cap));
    long n = long(total_);
    Matrix m = Matrix::Constant(n, n, Complex(rank_one_ / double(total_), 0.0));
    long off = 0;
    for (const auto& l : levels_) {
      for (long i = 0; i < l.degeneracy; ++i) m(off + i, off + i) += l.value;
      off += l.degeneracy;
    }
    return HermitianOperator(std::move(m));
  }

  // (1-s) A + s B over a shared partition.
  static ReducedModel interpolate(const ReducedModel& a, const ReducedModel& b,
                                  double s) {
    if (a.levels_.size() != b.levels_.size())
      throw DimensionMismatchError("interpolate: level counts differ");
    std::vector<Level> lv(a.levels_.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      if (a.levels_[i].degeneracy != b.levels_[i].degeneracy)
        throw DimensionMismatchError("interpolate: partitions differ");
      lv[i] = {(1.0 - s) * a.levels_[i].value + s * b.levels_[i].value,
               a.levels_[i].degeneracy};
    }
    return ReducedModel(std::move(lv),
                        (1.0 - s) * a.rank_one_ + s * b.rank_one_);
  }

 private:
  std::vector<Level> levels_;
  double rank_one_ = 0.0;
  std::int64_t total_ = 0;
};

// Effective matrix of r |psi0><psi0| + diag(levels) over normalized
// class-symmetric vectors.
inline Eigen::MatrixXd class_matrix(const std::vector<Level>& lv, double rank_one) {
  long L = long(lv.size());
  if (L == 0) throw EmptyLevelsError("no levels");
  std::int64_t N = 0;
  for (const auto& l : lv) N += l.degeneracy;
  Eigen::MatrixXd m(L, L);
  for (long a = 0; a < L; ++a)
    for (long b = 0; b < L; ++b)
      m(a, b) = rank_one *
                std::sqrt(double(lv[a].degeneracy) * double(lv[b].degeneracy)) /
                double(N);
  for (long a = 0; a < L; ++a) m(a, a) += lv[a].value;
  return m;
}

inline Eigen::MatrixXd ReducedModel::effective() const {
  return class_matrix(merged_levels(), rank_one_);
}

inline Eigen::MatrixXd ReducedModel::effective_unmerged() const {
  return class_matrix(levels_, rank_one_);
}

// Reduction of H(s) = (1-s) H0 + s diag(levels), H0 = -|psi0><psi0|:
// M_ab = s E_a delta_ab - (1-s) sqrt(N_a N_b) / N.
inline HermitianOperator symmetric_reduce(const std::vector<Level>& levels,
                                          double s) {
  if (levels.empty()) throw EmptyLevelsError("symmetric_reduce: no levels");
  std::vector<Level> scaled;
  for (const auto& l : ReducedModel(levels, 0.0).merged_levels())
    scaled.push_back({s * l.value, l.degeneracy});
  return HermitianOperator(class_matrix(scaled, -(1.0 - s)).cast<Complex>());
}

// The interpolation H(s) above as a ReducedModel (carries the deflated part).
inline ReducedModel symmetric_interpolation(const std::vector<Level>& levels,
                                            double s) {
  std::vector<Level> scaled;
  for (const auto& l : levels) scaled.push_back({s * l.value, l.degeneracy});
  return ReducedModel(std::move(scaled), -(1.0 - s));
}

}  // namespace qsrt
