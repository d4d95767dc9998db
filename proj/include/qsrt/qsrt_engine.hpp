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
// Measurement-conditioned resonant-transition protocol.
//
// One step drives the register from the ground state of H_prev to that of
// H_curr by sweeping a probe frequency window and reading the probe after
// each evolution. Design notes, all enforced by simulation experiments:
//
//  * A single decay is not trusted: sinc sidelobes and spectator transitions
//    produce stray decays several linewidths off. A frequency is declared
//    resonant only when round-trip transitions flow freely there (>= 6 decays
//    in 12 alternating forward/backward trials). The backward frequency map
//    omega_b = E0_prev - alpha (omega + alpha E0_prev) embeds the reference
//    energy, so only the true ground pair can pass the confirmation.
//
//  * Confirmation and collapse pulses run at 0.61 of the half-rotation. Near
//    unit decay probability a rare no-decay outcome projects the register
//    onto leaked components; keeping probabilities in [0.4, 0.92] avoids
//    that amplification.
//
//  * Eigenvalue refinement zooms by halving the probe coupling per level and
//    re-locking on an alpha-dense grid around the estimate. Evolution time
//    doubles per level, which reproduces the 1/epsilon^2 total-time scaling.
//
//  * Backward pulses can collapse the register onto deflated spectator
//    levels that are exact eigenstates of both step Hamiltonians and
//    therefore dark to every subsequent pulse. Sweeps widen their window to
//    catch the spectator's own exit transition, and the multi-step driver
//    restarts the chain from the product state when a step exhausts its
//    budget.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "qsrt/errors.hpp"
#include "qsrt/joint_system.hpp"
#include "qsrt/spectral.hpp"
#include "qsrt/transcript.hpp"

namespace qsrt {
namespace engine {

// Pulse fraction keeping confirmation decay probabilities inside [0.4, 0.92]
// for overlap ratios d0 / d0_estimate in [0.8, 1.35].
constexpr double kSafePulse = 0.61;
constexpr int kBurstTrials = 12;
constexpr int kBurstLock = 6;

struct StepConfig {
  double omega_min = 0.0;
  double omega_max = 0.0;
  int grid_points = 0;              // 0: spacing = 2 c d0_estimate
  double coupling = 1e-2;           // c
  double d0_estimate = 1.0;         // configured overlap guess for the t rule
  double time_override = 0.0;       // 0: t = pi / (2 c d0_estimate)
  int max_iters_per_frequency = 0;  // 0: ceil(3 / p_hat)
  long max_total_iters = 2'000'000;
  std::uint64_t rng_seed = 1;
  double target_accuracy = 1e-3;    // epsilon for the eigenvalue estimate
  long dense_cap = kDefaultDenseCap;
};

struct StepOutcome {
  double resonant_frequency = 0.0;
  double eigenvalue_estimate = 0.0;
  ComplexState prepared_state;
  double decay_probability_at_resonance = 0.0;  // p0 = sin^2(c t d0), exact
  long iteration_count = 0;
  std::vector<std::pair<double, int>> measurement_log;  // (frequency, outcome)
};

struct RefineOutcome {
  double omega = 0.0;
  double energy = 0.0;
  ComplexState state;
  long iterations = 0;
};

// Internal state machine shared by the sweep and the refinement.
class StepRunner {
 public:
  StepRunner(const HermitianOperator& h_prev, const HermitianOperator& h_curr,
             double alpha, double prev_energy, const StepConfig& cfg, Rng& rng,
             Transcript* transcript, int step_index, long* total_iters)
      : h_prev_(h_prev),
        h_curr_(h_curr),
        alpha_(alpha),
        prev_energy_(prev_energy),
        cfg_(cfg),
        rng_(rng),
        transcript_(transcript),
        step_(step_index),
        total_iters_(total_iters) {}

  enum class Role { Prev, Curr };

  void set_register(ComplexState reg, Role role) {
    reg_ = std::move(reg);
    role_ = role;
  }
  const ComplexState& reg() const { return reg_; }
  Role role() const { return role_; }
  long iterations() const { return iters_; }

  double nominal_time() const {
    if (cfg_.time_override > 0.0) return cfg_.time_override;
    return M_PI / (2.0 * cfg_.coupling * cfg_.d0_estimate);
  }
  double linewidth() const { return 2.0 * cfg_.coupling * cfg_.d0_estimate; }

  double omega_back(double omega) const {
    return prev_energy_ - alpha_ * (omega + alpha_ * prev_energy_);
  }
  double omega_from_back(double omega_b) const {
    return (prev_energy_ - omega_b) / alpha_ - alpha_ * prev_energy_;
  }

  JointSystem forward_system(double omega, double coupling) const {
    return JointSystem(h_prev_, h_curr_, alpha_, omega, coupling, cfg_.dense_cap);
  }
  JointSystem backward_system(double omega, double coupling) const {
    return JointSystem(h_curr_, h_prev_, alpha_, omega_back(omega), coupling,
                       cfg_.dense_cap);
  }

  // One evolve-and-measure trial. A decay pins the role to the system's
  // target side; budget overruns raise BudgetExhausted.
  int trial(const JointSystem& sys, double t, Role target, double omega,
            int freq_index) {
    ++iters_;
    if (total_iters_ != nullptr) {
      ++*total_iters_;
      if (*total_iters_ > cfg_.max_total_iters)
        throw BudgetExhaustedError("max_total_iters exceeded", step_);
    } else if (iters_ > cfg_.max_total_iters) {
      throw BudgetExhaustedError("max_total_iters exceeded", step_);
    }
    auto [bit, collapsed] = evolve_and_measure(sys, sys.excited_probe(reg_), t, rng_);
    reg_ = JointSystem::register_part(collapsed, bit);
    if (bit == 0) role_ = target;
    if (transcript_ != nullptr)
      transcript_->record({step_, freq_index, omega, t, bit, iters_});
    log_.push_back({omega, bit});
    return bit;
  }

  // Round-trip confirmation burst at a frequency hypothesis. Aborts after
  // four unresponsive trials; the lock criterion is kBurstLock flips.
  int burst(double omega, double coupling) {
    double t = kSafePulse * M_PI / (2.0 * coupling * cfg_.d0_estimate);
    JointSystem fwd = forward_system(omega, coupling);
    JointSystem bwd = backward_system(omega, coupling);
    int flips = 0;
    for (int i = 0; i < kBurstTrials; ++i) {
      if (role_ == Role::Prev) {
        if (trial(fwd, t, Role::Curr, omega, -1) == 0) ++flips;
      } else {
        if (trial(bwd, t, Role::Prev, bwd.omega(), -1) == 0) ++flips;
      }
      if (i == 3 && flips == 0) return 0;
    }
    return flips;
  }

  // Exit on a fresh forward collapse at omega, so the handed-off register is
  // always a newly projected ground state.
  void collapse_to_curr(double omega) {
    double base = kSafePulse * nominal_time();
    static constexpr double kCycle[3] = {1.0, 0.6, 1.4};
    JointSystem fwd = forward_system(omega, cfg_.coupling);
    JointSystem bwd = backward_system(omega, cfg_.coupling);
    for (int k = 0; k < 96; ++k) {
      double t = base * kCycle[k % 3];
      if (role_ == Role::Curr) {
        trial(bwd, t, Role::Prev, bwd.omega(), -1);
      } else {
        if (trial(fwd, t, Role::Curr, omega, -1) == 0) return;
      }
    }
    throw BudgetExhaustedError("final collapse starved", step_);
  }

  const std::vector<std::pair<double, int>>& log() const { return log_; }

 private:
  const HermitianOperator& h_prev_;
  const HermitianOperator& h_curr_;
  double alpha_;
  double prev_energy_;
  StepConfig cfg_;
  Rng& rng_;
  Transcript* transcript_;
  int step_;
  long* total_iters_;
  ComplexState reg_;
  Role role_ = Role::Prev;
  long iters_ = 0;
  std::vector<std::pair<double, int>> log_;
};

// Exact decay probability of the nominal pulse at a frequency, computed from
// the joint decomposition (not sampled).
inline double decay_probability(const HermitianOperator& h_prev,
                                const HermitianOperator& h_curr, double alpha,
                                double omega, const StepConfig& cfg,
                                const ComplexState& prev_ground, double t) {
  JointSystem sys(h_prev, h_curr, alpha, omega, cfg.coupling, cfg.dense_cap);
  ComplexState evolved = evolve(sys.decomposition(), sys.excited_probe(prev_ground), t);
  return JointSystem::probe_ground_probability(evolved);
}

// One protocol step: sweep the frequency window (the window widens if the
// register strays into a spectator state), confirm the first responsive
// frequency by round-trip flow, and leave the register freshly collapsed on
// the target ground state.
inline StepOutcome run_step(const HermitianOperator& h_prev,
                            const ComplexState& prev_ground, double prev_energy,
                            const HermitianOperator& h_curr, double alpha,
                            const StepConfig& cfg, Rng& rng,
                            Transcript* transcript = nullptr,
                            int step_index = 1, long* total_iters = nullptr) {
  if (cfg.omega_min >= cfg.omega_max)
    throw ConfigInvalidError("omega_min >= omega_max");
  StepRunner run(h_prev, h_curr, alpha, prev_energy, cfg, rng, transcript,
                 step_index, total_iters);
  run.set_register(prev_ground, StepRunner::Role::Prev);

  double t = run.nominal_time();
  double spacing = run.linewidth();
  int iters_per_freq = cfg.max_iters_per_frequency > 0
                           ? cfg.max_iters_per_frequency
                           : 3;  // ceil(3 / p_hat) with p_hat = 1 at nominal t
  double mid = (cfg.omega_min + cfg.omega_max) / 2.0;
  double half = (cfg.omega_max - cfg.omega_min) / 2.0;

  for (double widen : {1.0, 3.0, 9.0}) {
    double lo = mid - half * widen;
    double hi = mid + half * widen;
    int npts = cfg.grid_points >= 1 && widen == 1.0
                   ? cfg.grid_points
                   : int(std::ceil((hi - lo) / spacing)) + 1;
    for (int gi = 0; gi < npts; ++gi) {
      double omega = npts == 1 ? mid : lo + (hi - lo) * double(gi) / double(npts - 1);
      JointSystem fwd = run.forward_system(omega, cfg.coupling);
      bool decayed = false;
      for (int rep = 0; rep < iters_per_freq; ++rep)
        if (run.trial(fwd, t, StepRunner::Role::Curr, omega, gi) == 0) {
          decayed = true;
          break;
        }
      if (!decayed) continue;
      for (double g : {omega, omega - 0.5 * spacing, omega + 0.5 * spacing,
                       omega - spacing, omega + spacing}) {
        if (run.burst(g, cfg.coupling) >= kBurstLock) {
          run.collapse_to_curr(g);
          StepOutcome out;
          out.resonant_frequency = g;
          out.eigenvalue_estimate = g + alpha * prev_energy;
          out.prepared_state = run.reg();
          out.decay_probability_at_resonance =
              decay_probability(h_prev, h_curr, alpha, g, cfg, prev_ground, t);
          out.iteration_count = run.iterations();
          out.measurement_log = run.log();
          return out;
        }
      }
    }
  }
  throw BudgetExhaustedError("sweep found no confirmed resonance", step_index);
}

// Eigenvalue refinement by zooming re-locks at halved couplings.
inline RefineOutcome refine_eigenvalue(const HermitianOperator& h_prev,
                                       double prev_energy,
                                       const HermitianOperator& h_curr,
                                       double alpha, double omega_star,
                                       const ComplexState& prepared,
                                       const StepConfig& cfg, Rng& rng,
                                       Transcript* transcript = nullptr,
                                       int step_index = 1,
                                       long* total_iters = nullptr) {
  StepRunner run(h_prev, h_curr, alpha, prev_energy, cfg, rng, transcript,
                 step_index, total_iters);
  run.set_register(prepared, StepRunner::Role::Curr);

  double est = omega_star;
  double eps = cfg.target_accuracy;
  double grid_spacing =
      cfg.grid_points > 1
          ? (cfg.omega_max - cfg.omega_min) / double(cfg.grid_points - 1)
          : run.linewidth();
  RefineOutcome out;
  if (eps >= grid_spacing) {
    // already at the requested accuracy: no extra iterations
    out.omega = est;
    out.energy = est + alpha * prev_energy;
    out.state = prepared;
    out.iterations = 0;
    return out;
  }

  double amap = std::max(1.0, std::abs(alpha));
  double ck = cfg.coupling;
  double prev_spacing = 2.0 * ck * cfg.d0_estimate / amap;
  while (2.0 * ck * cfg.d0_estimate / amap > 0.45 * eps) {
    ck /= 2.0;
    double spk = 2.0 * ck * cfg.d0_estimate / amap;
    bool locked = false;
    for (int attempt = 0; attempt < 6 && !locked; ++attempt) {
      double hw = 1.5 * prev_spacing * double(1 << (attempt / 2));
      int half_pts = int(std::ceil(hw / spk));
      double offset = (attempt % 2) * 0.5 * spk;
      // center-outward over the offset grid
      for (int k = 0; k <= 2 * half_pts && !locked; ++k) {
        int idx = (k + 1) / 2 * (k % 2 == 1 ? 1 : -1);
        double g = est + offset + spk * double(idx);
        if (run.burst(g, ck) >= kBurstLock) {
          est = g;
          locked = true;
        }
      }
    }
    if (!locked)
      throw BudgetExhaustedError("refinement lost the resonance", step_index);
    prev_spacing = spk;
  }
  // polish: check the half-spacing neighbours once
  for (double g : {est - 0.5 * prev_spacing, est + 0.5 * prev_spacing}) {
    if (run.burst(g, ck) >= kBurstLock) {
      est = (est + g) / 2.0;
      break;
    }
  }
  run.collapse_to_curr(est);
  out.omega = est;
  out.energy = est + alpha * prev_energy;
  out.state = run.reg();
  out.iterations = run.iterations();
  return out;
}

// A chain entry: the register Hamiltonian of one step plus the per-step
// protocol parameters set by the family's alpha rule.
struct ChainStep {
  HermitianOperator hamiltonian;
  double alpha = 1.0;
  double omega_min = 0.0;
  double omega_max = 0.0;
  double d0_estimate = 1.0;
  double exact_ground_energy = 0.0;  // reference energy of this Hamiltonian
};

struct Chain {
  HermitianOperator initial;        // easily prepared projector-form start
  ComplexState initial_ground;
  double initial_energy = 0.0;
  std::vector<ChainStep> steps;
};

struct MultiStepResult {
  ComplexState final_state;
  std::vector<double> energy_trace;     // measured E0 per step
  std::vector<StepOutcome> steps;
  long total_iterations = 0;
  int restarts = 0;
};

// First-order leakage bound of one step, from the actual spectra; zero when
// its assumptions do not hold.
inline double step_leakage_bound(const HermitianOperator& h_prev,
                                 const HermitianOperator& h_curr, double alpha,
                                 double coupling);

inline MultiStepResult run_multistep(const Chain& chain, const StepConfig& cfg,
                                     Rng& rng, Transcript* transcript = nullptr,
                                     int max_restarts = 64) {
  MultiStepResult result;
  long total = 0;
  int restarts = 0;
  while (true) {
    result.energy_trace.clear();
    result.steps.clear();
    if (transcript != nullptr) transcript->clear();
    ComplexState reg = chain.initial_ground;
    double prev_energy = chain.initial_energy;
    const HermitianOperator* h_prev = &chain.initial;
    try {
      for (std::size_t l = 0; l < chain.steps.size(); ++l) {
        const ChainStep& step = chain.steps[l];
        StepConfig scfg = cfg;
        scfg.omega_min = step.omega_min;
        scfg.omega_max = step.omega_max;
        scfg.d0_estimate = step.d0_estimate;
        StepOutcome sweep =
            run_step(*h_prev, reg, prev_energy, step.hamiltonian, step.alpha,
                     scfg, rng, transcript, int(l) + 1, &total);
        RefineOutcome fine = refine_eigenvalue(
            *h_prev, prev_energy, step.hamiltonian, step.alpha,
            sweep.resonant_frequency, sweep.prepared_state, scfg, rng,
            transcript, int(l) + 1, &total);
        sweep.eigenvalue_estimate = fine.energy;
        sweep.iteration_count += fine.iterations;
        reg = fine.state;
        result.energy_trace.push_back(fine.energy);
        result.steps.push_back(std::move(sweep));
        if (transcript != nullptr) {
          StepSummary sum;
          sum.step = int(l) + 1;
          sum.omega_star = fine.omega;
          sum.e0 = fine.energy;
          sum.p0 = result.steps.back().decay_probability_at_resonance;
          sum.iterations = result.steps.back().iteration_count;
          sum.bound_a2c2 = step_leakage_bound(*h_prev, step.hamiltonian,
                                              step.alpha, cfg.coupling);
          transcript->summarize(sum);
        }
        // the measured energy is an estimate; the reference for the next
        // step's frequency map is the chain's stated ground energy
        prev_energy = step.exact_ground_energy;
        h_prev = &chain.steps[l].hamiltonian;
      }
    } catch (const BudgetExhaustedError& e) {
      ++restarts;
      if (restarts > max_restarts || total > cfg.max_total_iters)
        throw BudgetExhaustedError(
            std::string("multistep failed after restarts: ") + e.what(),
            e.step());
      continue;  // restart from the product state
    }
    result.final_state = reg;
    result.total_iterations = total;
    result.restarts = restarts;
    return result;
  }
}

}  // namespace engine
}  // namespace qsrt

#include "qsrt/bounds.hpp"

namespace qsrt {
namespace engine {

inline double step_leakage_bound(const HermitianOperator& h_prev,
                                 const HermitianOperator& h_curr, double alpha,
                                 double coupling) {
  SpectralDecomposition dp = eigh(h_prev);
  SpectralDecomposition dc = eigh(h_curr);
  double d0 = std::abs(overlap(dc.state(0), dp.state(0)));
  try {
    return leakage_bound(dp.gap(), dc.gap(), d0, alpha, coupling);
  } catch (const AssumptionViolatedError&) {
    return 0.0;
  }
}

}  // namespace engine
}  // namespace qsrt
