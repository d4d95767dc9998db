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
// Dense complex linear-algebra kernel: Hermitian eigendecomposition with a
// fixed phase convention, unitary time evolution through the spectral
// decomposition, and state arithmetic. Everything downstream (problem
// construction, gap scans, the resonant-transition engine) sits on top of
// these three operations.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <ostream>
#include <vector>

#include "qsrt/errors.hpp"

namespace qsrt {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

constexpr double kHermTol = 1e-9;
constexpr long kDefaultDenseCap = 8192;

// Normalized complex state vector.
class ComplexState {
 public:
  ComplexState() = default;
  explicit ComplexState(Vector amplitudes) : amp_(std::move(amplitudes)) {}

  static ComplexState basis(long dim, long index) {
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return ComplexState(std::move(v));
  }

  static ComplexState uniform(long dim) {
    Vector v = Vector::Constant(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
    return ComplexState(std::move(v));
  }

  long dim() const { return amp_.size(); }
  const Vector& amplitudes() const { return amp_; }
  Vector& amplitudes() { return amp_; }
  Complex operator[](long i) const { return amp_(i); }

  double norm() const { return amp_.norm(); }

  ComplexState& normalize() {
    double n = amp_.norm();
    if (n > 0.0) amp_ /= n;
    return *this;
  }

 private:
  Vector amp_;
};

inline Complex overlap(const ComplexState& a, const ComplexState& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatchError("overlap: dims " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
  return a.amplitudes().dot(b.amplitudes());  // Eigen dot conjugates the left side
}

// Dense Hermitian matrix (energies in units of hbar = 1). Construction
// verifies the symmetry to kHermTol.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(Matrix entries) : m_(std::move(entries)) {
    if (m_.rows() != m_.cols())
      throw NonHermitianError("matrix is not square");
    double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > kHermTol)
      throw NonHermitianError("hermiticity violation " + std::to_string(dev));
    // remove the representational skew so downstream eigensolves see an
    // exactly Hermitian matrix
    m_ = ((m_ + m_.adjoint()) / 2.0).eval();
  }

  long dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;  // ascending
  Matrix eigenvectors;          // columns, orthonormal

  long dim() const { return eigenvalues.size(); }

  ComplexState state(long k) const { return ComplexState(eigenvectors.col(k)); }

  double ground_energy() const { return eigenvalues(0); }
  double gap() const { return eigenvalues(1) - eigenvalues(0); }
};

namespace detail {

// Phase convention: first component with magnitude above tol is made real
// positive, so repeated runs produce identical vectors.
inline void fix_phase(Matrix& vecs) {
  for (long k = 0; k < vecs.cols(); ++k) {
    for (long i = 0; i < vecs.rows(); ++i) {
      Complex a = vecs(i, k);
      if (std::abs(a) > 1e-12) {
        vecs.col(k) *= std::conj(a) / std::abs(a);
        break;
      }
    }
  }
}

}  // namespace detail

inline SpectralDecomposition eigh(const HermitianOperator& H,
                                  long cap = kDefaultDenseCap) {
  if (H.dim() > cap)
    throw DimensionCapError("dim " + std::to_string(H.dim()) + " exceeds cap " +
                            std::to_string(cap));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H.matrix());
  SpectralDecomposition d;
  d.eigenvalues = solver.eigenvalues();
  d.eigenvectors = solver.eigenvectors();
  detail::fix_phase(d.eigenvectors);
  return d;
}

// Eigenvalues only; used for large dense cross-checks where vectors are not
// needed.
inline Eigen::VectorXd eigenvalues_only(const HermitianOperator& H,
                                        long cap = kDefaultDenseCap) {
  if (H.dim() > cap)
    throw DimensionCapError("dim " + std::to_string(H.dim()) + " exceeds cap " +
                            std::to_string(cap));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(H.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

inline Eigen::VectorXd eigenvalues_only_real(const Eigen::MatrixXd& sym,
                                             long cap = kDefaultDenseCap) {
  if (sym.rows() > cap)
    throw DimensionCapError("dim " + std::to_string(sym.rows()) +
                            " exceeds cap " + std::to_string(cap));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// exp(-i H t) |psi> through a precomputed decomposition.
inline ComplexState evolve(const SpectralDecomposition& d, const ComplexState& psi,
                           double t) {
  if (d.dim() != psi.dim())
    throw DimensionMismatchError("evolve: dims " + std::to_string(d.dim()) +
                                 " vs " + std::to_string(psi.dim()));
  Vector coeff = d.eigenvectors.adjoint() * psi.amplitudes();
  for (long k = 0; k < coeff.size(); ++k)
    coeff(k) *= std::exp(Complex(0.0, -d.eigenvalues(k) * t));
  return ComplexState(d.eigenvectors * coeff);
}

inline ComplexState evolve(const HermitianOperator& H, const ComplexState& psi,
                           double t) {
  return evolve(eigh(H), psi, t);
}

// Cached unitary U = exp(-i H t); the workhorse of the measurement loop where
// one (H, t) setting is applied to many register states.
class Propagator {
 public:
  Propagator(const SpectralDecomposition& d, double t) {
    Matrix phases = Matrix::Zero(d.dim(), d.dim());
    for (long k = 0; k < d.dim(); ++k)
      phases(k, k) = std::exp(Complex(0.0, -d.eigenvalues(k) * t));
    u_ = d.eigenvectors * phases * d.eigenvectors.adjoint();
  }

  ComplexState apply(const ComplexState& psi) const {
    return ComplexState(u_ * psi.amplitudes());
  }

  long dim() const { return u_.rows(); }

 private:
  Matrix u_;
};

// Debug dump: one row per eigenpair, eigenvalue then interleaved re/im
// components.
inline void dump_csv(const SpectralDecomposition& d, std::ostream& os) {
  for (long k = 0; k < d.dim(); ++k) {
    os << d.eigenvalues(k);
    for (long i = 0; i < d.dim(); ++i)
      os << ',' << d.eigenvectors(i, k).real() << ',' << d.eigenvectors(i, k).imag();
    os << '\n';
  }
}

}  // namespace qsrt
