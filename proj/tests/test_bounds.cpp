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

#include <catch2/catch.hpp>
#include <cmath>
#include <random>

#include "qsrt/bounds.hpp"
#include "qsrt/joint_system.hpp"
#include "test_support.hpp"

using namespace qsrt;
using namespace qsrt::engine;
using qsrt_test::random_hermitian;

TEST_CASE("leakage bound vanishes with perfect overlap") {
  CHECK(leakage_bound(1.0, 1.0, 1.0, 1.0, 1e-2) == Approx(0.0).margin(1e-18));
}

TEST_CASE("leakage bound falls as the fourth power of the coupling") {
  double prev = 0.0;
  bool first = true;
  for (double c : {1e-2, 1e-3, 1e-4}) {
    double b = leakage_bound(0.8, 0.9, 0.7, 1.1, c);
    if (!first) CHECK(prev / b == Approx(1e4).epsilon(0.02));
    prev = b;
    first = false;
  }
}

TEST_CASE("leakage bound preconditions") {
  CHECK_THROWS_AS(leakage_bound(1e-4, 0.9, 0.7, 1.0, 1e-2),
                  AssumptionViolatedError);
  CHECK_THROWS_AS(leakage_bound(0.9, 1e-4, 0.7, 1.0, 1e-2),
                  AssumptionViolatedError);
}

TEST_CASE("exact leakage scales as the coupling squared") {
  // Dense evolution on random adjacent pairs. The measured leaked population
  // follows c^2 sum_j (d_j0 / delta_j)^2 (the initial state's perturbative
  // dressing), not the c^4 scale of the printed first-order bound; the
  // acceptance suite reports that discrepancy, this test pins the physics.
  long N = 8;
  std::mt19937_64 mt(314159);
  for (int rep = 0; rep < 5; ++rep) {
    HermitianOperator hp(random_hermitian(N, mt));
    HermitianOperator hc(random_hermitian(N, mt));
    auto dp = eigh(hp);
    auto dc = eigh(hc);
    double gap_prev = dp.eigenvalues(1) - dp.eigenvalues(0);
    double gap_curr = dc.eigenvalues(1) - dc.eigenvalues(0);
    double d0 = std::abs(overlap(dc.state(0), dp.state(0)));
    if (gap_prev < 0.3 || gap_curr < 0.3 || d0 < 0.4) continue;
    double alpha = 1.0;
    double omega = dc.eigenvalues(0) - alpha * dp.eigenvalues(0);
    auto leak_at = [&](double c) {
      JointSystem sys(hp, hc, alpha, omega, c);
      double t = M_PI / (2.0 * c * d0);
      ComplexState evolved =
          evolve(sys.decomposition(), sys.excited_probe(dp.state(0)), t);
      ComplexState reg0 = JointSystem::register_part(evolved, 0);
      ComplexState reg1 = JointSystem::register_part(evolved, 1);
      double p_decay = JointSystem::probe_ground_probability(evolved);
      return p_decay * (1.0 - std::norm(overlap(dc.state(0), reg0))) +
             (1.0 - p_decay) * (1.0 - std::norm(overlap(dp.state(0), reg1)));
    };
    double l2 = leak_at(1e-2);
    double l3 = leak_at(1e-3);
    // one decade in c moves the leakage by two decades
    CHECK(l2 / l3 == Approx(100.0).epsilon(0.5));
    // and a c^2-scale envelope bounds it
    CHECK(l2 <= 4.0 * 1e-4 * (1.0 - d0 * d0) *
                    (1.0 / (gap_curr * gap_curr) + 1.0 / (gap_prev * gap_prev)) *
                    double(N));
  }
}

TEST_CASE("success bound values") {
  CHECK(success_bound(0.5, 1e-2, 0) == Approx(1.0));
  // a_max c = 1/sqrt(m), m = 100: (1 - 0.01)^100, slightly below 1/e
  CHECK(success_bound(10.0, 1e-2, 100) == Approx(0.366032).epsilon(1e-5));
  CHECK(success_bound(1.0, 1e-2, 9) == Approx(0.99910).epsilon(1e-4));
  CHECK_THROWS_AS(success_bound(200.0, 1e-2, 4), DomainError);
  // with a_max c < 1/sqrt(m) the bound approaches 1/e from below as m grows
  double prev = 0.0;
  for (int m : {10, 100, 1000, 10000}) {
    double b = success_bound(1.0 / std::sqrt(double(m)), 1.0, m);
    CHECK(b > prev);
    CHECK(b < 1.0 / std::exp(1.0));
    prev = b;
  }
  CHECK(prev == Approx(1.0 / std::exp(1.0)).epsilon(1e-4));
}
