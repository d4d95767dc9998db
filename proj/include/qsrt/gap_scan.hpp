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
// Gap-versus-s scans. The two lowest eigenvalues of H(s) are evaluated on a
// grid (via the symmetric reduction where the interpolation is class
// structured, dense otherwise) and the located minimum is refined by
// golden-section search.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qsrt/adiabatic.hpp"
#include "qsrt/errors.hpp"
#include "qsrt/reduced_model.hpp"
#include "qsrt/step_pair.hpp"

namespace qsrt {
namespace adiabatic {

struct GapScan {
  std::vector<double> s_grid;
  std::vector<double> gaps;
  double min_gap = 0.0;
  double s_star = 0.0;
};

inline int scan_threads() {
  if (const char* env = std::getenv("QSRT_SIM_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : int(hc);
}

// Scans gap(s) on a uniform grid over [0, 1] and refines the minimum around
// the coarse argmin; grid evaluation runs in parallel, merged by index.
inline GapScan scan_gap_function(const std::function<double(double)>& gap,
                                 int grid_points, double refine_tol = 1e-10) {
  if (grid_points < 3) throw DomainError("scan_gap: grid_points < 3");
  GapScan scan;
  scan.s_grid.resize(std::size_t(grid_points));
  scan.gaps.resize(std::size_t(grid_points));
  for (int i = 0; i < grid_points; ++i)
    scan.s_grid[std::size_t(i)] = double(i) / double(grid_points - 1);

  int workers = std::min(scan_threads(), grid_points);
  std::vector<std::thread> pool;
  std::size_t chunk = (std::size_t(grid_points) + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(lo + chunk, std::size_t(grid_points));
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi]() {
      for (std::size_t i = lo; i < hi; ++i) scan.gaps[i] = gap(scan.s_grid[i]);
    });
  }
  for (auto& t : pool) t.join();

  std::size_t imin = 0;
  for (std::size_t i = 1; i < scan.gaps.size(); ++i)
    if (scan.gaps[i] < scan.gaps[imin]) imin = i;
  double a = scan.s_grid[imin > 0 ? imin - 1 : 0];
  double b = scan.s_grid[std::min(imin + 1, scan.gaps.size() - 1)];
  scan.s_star = golden_minimize(gap, a, b, refine_tol);
  scan.min_gap = gap(scan.s_star);
  return scan;
}

// Interpolation (1-s) A + s B of two class-structured operators sharing a
// partition. The merged block spectrum and deflated values are ranked
// together so a crossing with a deflated level is never missed.
inline GapScan scan_gap(const ReducedModel& a, const ReducedModel& b,
                        int grid_points) {
  auto gap = [&](double s) {
    ReducedModel h = ReducedModel::interpolate(a, b, s);
    auto [e0, e1] = h.two_lowest();
    return e1 - e0;
  };
  return scan_gap_function(gap, grid_points);
}

// Interpolation from H0 = -|psi0><psi0| to the diagonal problem operator
// with the given level profile.
inline GapScan scan_gap_levels(const std::vector<Level>& problem_levels,
                               int grid_points) {
  auto gap = [&](double s) {
    auto [e0, e1] = symmetric_interpolation(problem_levels, s).two_lowest();
    return e1 - e0;
  };
  return scan_gap_function(gap, grid_points);
}

inline GapScan scan_gap_dense(const HermitianOperator& a,
                              const HermitianOperator& b, int grid_points,
                              long cap = kDefaultDenseCap) {
  if (a.dim() != b.dim()) throw DimensionMismatchError("scan_gap_dense dims");
  auto gap = [&](double s) {
    Matrix m = (1.0 - s) * a.matrix() + s * b.matrix();
    Eigen::VectorXd ev = eigenvalues_only(HermitianOperator(m), cap);
    return ev(1) - ev(0);
  };
  return scan_gap_function(gap, grid_points);
}

// Ground-to-first-excited gap of the 3x3 step-pair block at fixed marked
// ratio (1/10 reproduces the printed matrix), scanned over s.
inline GapScan stepwise_gap_scan(double f, double ratio, int grid_points) {
  auto gap = [&](double s) {
    Eigen::Matrix3d m = stepwise_matrix(f, ratio, s);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(1) - es.eigenvalues()(0);
  };
  return scan_gap_function(gap, grid_points);
}

// Unweighted least squares of log y on log x.
struct PowerFit {
  double exponent = 0.0;
  double intercept = 0.0;  // log-space intercept
  double r2 = 0.0;
};

inline PowerFit fit_scaling(const std::vector<double>& xs,
                            const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.size() < 3)
    throw DomainError("fit_scaling: need >= 3 matched points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  double n = double(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] <= 0.0 || ys[i] <= 0.0)
      throw DomainError("fit_scaling: nonpositive input");
    double lx = std::log(xs[i]), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  PowerFit fit;
  double denom = n * sxx - sx * sx;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss_tot = syy - sy * sy / n;
  double ss_res = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double pred = fit.intercept + fit.exponent * std::log(xs[i]);
    double res = std::log(ys[i]) - pred;
    ss_res += res * res;
  }
  fit.r2 = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  return fit;
}

}  // namespace adiabatic
}  // namespace qsrt
