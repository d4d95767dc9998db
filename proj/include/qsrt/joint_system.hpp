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
// Probe-plus-register Hamiltonian
//
//   H = -(omega/2) sigma_z ⊗ I_N + alpha |1><1| ⊗ H_prev
//       + |0><0| ⊗ H_curr + c sigma_x ⊗ I_N
//
// with the convention sigma_z |0> = +|0>, sigma_z |1> = -|1>, so the probe's
// excited branch |1> carries +omega/2 and the rescaled previous Hamiltonian.
// Joint indices: [0, N) is the probe-|0> branch, [N, 2N) the probe-|1>
// branch. A probe measurement projects onto one branch and renormalizes.

#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "qsrt/errors.hpp"
#include "qsrt/spectral.hpp"

namespace qsrt {
namespace engine {

// Deterministic [0, 1) doubles from the raw 64-bit stream; identical output
// on every platform for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }
  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

class JointSystem {
 public:
  JointSystem(const HermitianOperator& h_prev, const HermitianOperator& h_curr,
              double alpha, double omega, double coupling,
              long cap = kDefaultDenseCap)
      : n_(h_prev.dim()), alpha_(alpha), omega_(omega), coupling_(coupling) {
    if (h_prev.dim() != h_curr.dim())
      throw DimensionMismatchError("joint register dims differ");
    if (2 * n_ > cap)
      throw DimensionCapError("joint dim " + std::to_string(2 * n_) +
                              " exceeds cap");
    Matrix m = Matrix::Zero(2 * n_, 2 * n_);
    m.topLeftCorner(n_, n_) = h_curr.matrix();
    m.bottomRightCorner(n_, n_) = alpha * h_prev.matrix();
    for (long i = 0; i < n_; ++i) {
      m(i, i) += Complex(-omega / 2.0, 0.0);
      m(n_ + i, n_ + i) += Complex(omega / 2.0, 0.0);
      m(i, n_ + i) = Complex(coupling, 0.0);
      m(n_ + i, i) = Complex(coupling, 0.0);
    }
    hamiltonian_ = HermitianOperator(std::move(m));
    decomposition_ = eigh(hamiltonian_, cap);
  }

  long register_dim() const { return n_; }
  long dim() const { return 2 * n_; }
  double alpha() const { return alpha_; }
  double omega() const { return omega_; }
  double coupling() const { return coupling_; }
  const HermitianOperator& hamiltonian() const { return hamiltonian_; }
  const SpectralDecomposition& decomposition() const { return decomposition_; }

  // |1> ⊗ |register>
  ComplexState excited_probe(const ComplexState& reg) const {
    if (reg.dim() != n_) throw DimensionMismatchError("excited_probe dim");
    Vector v = Vector::Zero(2 * n_);
    v.tail(n_) = reg.amplitudes();
    return ComplexState(std::move(v));
  }

  static double probe_ground_probability(const ComplexState& joint) {
    long n = joint.dim() / 2;
    return joint.amplitudes().head(n).squaredNorm();
  }

  static ComplexState register_part(const ComplexState& joint, int probe_bit) {
    long n = joint.dim() / 2;
    Vector v = probe_bit == 0 ? joint.amplitudes().head(n).eval()
                              : joint.amplitudes().tail(n).eval();
    ComplexState out{std::move(v)};
    out.normalize();
    return out;
  }

 private:
  long n_ = 0;
  double alpha_ = 0.0, omega_ = 0.0, coupling_ = 0.0;
  HermitianOperator hamiltonian_;
  SpectralDecomposition decomposition_;
};

inline JointSystem assemble(const HermitianOperator& h_prev,
                            const HermitianOperator& h_curr, double alpha,
                            double omega, double coupling,
                            long cap = kDefaultDenseCap) {
  return JointSystem(h_prev, h_curr, alpha, omega, coupling, cap);
}

// Evolve by exp(-iHt), read out the probe, collapse. Returns the measured
// probe bit and the renormalized joint state on the measured branch.
inline std::pair<int, ComplexState> evolve_and_measure(const JointSystem& sys,
                                                       const ComplexState& joint,
                                                       double t, Rng& rng) {
  ComplexState evolved = evolve(sys.decomposition(), joint, t);
  double p0 = JointSystem::probe_ground_probability(evolved);
  int bit = rng.uniform() < p0 ? 0 : 1;
  long n = sys.register_dim();
  Vector v = Vector::Zero(2 * n);
  if (bit == 0)
    v.head(n) = evolved.amplitudes().head(n);
  else
    v.tail(n) = evolved.amplitudes().tail(n);
  ComplexState collapsed{std::move(v)};
  collapsed.normalize();
  return {bit, std::move(collapsed)};
}

}  // namespace engine
}  // namespace qsrt
