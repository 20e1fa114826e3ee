// Copyright 2026 The cqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cqsim/twoqubit.hpp"
#include "support/oracles.hpp"

using namespace cqsim;
using namespace cqsim::testing;

TEST_CASE("h_two_qubit: tensor additivity at j = 0") {
  const TwoQubitParams p{{1.5, 2.0}, {-3.0, 0.7}, 0.0};
  const EigenDecomposition joint = herm_eig(h_two_qubit(p));

  const ComplexMatrix h1(2, {p.q1.eps_q, p.q1.t, p.q1.t, 0});
  const ComplexMatrix h2(2, {p.q2.eps_q, p.q2.t, p.q2.t, 0});
  const EigenDecomposition e1 = herm_eig(h1);
  const EigenDecomposition e2 = herm_eig(h2);
  std::vector<double> sums;
  for (double a : e1.eigenvalues)
    for (double b : e2.eigenvalues) sums.push_back(a + b);
  std::sort(sums.begin(), sums.end());
  for (int i = 0; i < 4; ++i)
    CHECK(joint.eigenvalues[i] == doctest::Approx(sums[i]).epsilon(1e-12));
}

TEST_CASE("h_two_qubit: conditional detuning shift at t1 = t2 = 0") {
  const double eps_q2 = 3.0, j = 1.25;
  const TwoQubitParams p{{-7.0, 0.0}, {eps_q2, 0.0}, j};
  const ComplexMatrix h = h_two_qubit(p);
  CHECK(h.hermiticity_defect() == 0.0);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      if (i != k) CHECK(std::abs(h(i, k)) == 0.0);

  // Completing the square: conditioned on qubit-1 sigma_z = s, qubit 2 sees
  // an effective detuning eps_q2 + 2 j s (up to a constant -j s).
  // Energy gaps along qubit 2: E(s, C) - E(s, E) = eps_q2 + 2 j s.
  const double gap_s_plus = std::real(h(0, 0) - h(1, 1));   // |C C> vs |C E>
  const double gap_s_minus = std::real(h(2, 2) - h(3, 3));  // |E C> vs |E E>
  CHECK(gap_s_plus == doctest::Approx(eps_q2 + 2.0 * j).epsilon(1e-14));
  CHECK(gap_s_minus == doctest::Approx(eps_q2 - 2.0 * j).epsilon(1e-14));
}

TEST_CASE("h_two_qubit commutes with sigma_z x I when t1 = 0") {
  const TwoQubitParams p{{-50.0, 0.0}, {-2.5, 1.0}, 10.0};
  const ComplexMatrix h = h_two_qubit(p);
  const ComplexMatrix z1 = kron(pauli_z(), ComplexMatrix::identity(2));
  CHECK((h * z1 - z1 * h).frobenius_norm() < 1e-12);
}

TEST_CASE("cnot_protocol: parameter validation") {
  CHECK_THROWS_AS(cnot_protocol(1.0, 5.0, -200.0), std::invalid_argument);   // j < 10 t2
  CHECK_THROWS_AS(cnot_protocol(1.0, 10.0, -20.0), std::invalid_argument);   // too shallow
  CHECK_THROWS_AS(cnot_protocol(0.0, 10.0, -200.0), std::invalid_argument);  // t2 = 0
  CHECK_NOTHROW(cnot_protocol(1.0, 10.0, -200.0));
}

TEST_CASE("cnot_protocol: truth table at j = 10 t2") {
  const double t2 = 1.0, j = 10.0;
  const TwoQubitSchedule s = cnot_protocol(t2, j, -250.0);
  const auto m = transfer_populations(s);

  // Control |0~>: the target flips resonantly and completely.
  CHECK(m[0][1] == doctest::Approx(1.0).epsilon(1e-10));  // 00 -> 01
  CHECK(m[1][0] == doctest::Approx(1.0).epsilon(1e-10));  // 01 -> 00

  // Control |1~>: leak-through bounded by the generalized-Rabi maximum.
  const double bound = t2 * t2 / (t2 * t2 + 4.0 * j * j);  // 1/401 here
  CHECK(m[2][3] <= bound + 1e-3);
  CHECK(m[3][2] <= bound + 1e-3);
  CHECK(m[2][2] >= 1.0 - bound - 1e-3);

  CHECK(truth_table_fidelity(s) >= 0.99);
}

TEST_CASE("degraded coupling j = t2 is detected") {
  const TwoQubitSchedule s = make_cnot_schedule(1.0, 1.0, -100.0);
  CHECK(truth_table_fidelity(s) < 0.99);
}

TEST_CASE("j = 0 decouples the control entirely") {
  const TwoQubitSchedule s = make_cnot_schedule(1.0, 0.0, -100.0);
  const auto m = transfer_populations(s);
  // Both control branches flip the target: no conditioning remains.
  CHECK(m[0][1] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(m[2][3] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(truth_table_fidelity(s) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("truth-table fidelity rises with j/t2 along its guaranteed floor") {
  // The exact control-|1~> rotation carries a sin^2 ripple in j, so the raw
  // fidelity is only monotone as an envelope: it never drops below
  // 1 - t2^2/(2 (t2^2 + 4 j^2)), and that floor rises monotonically.
  const double t2 = 1.0;
  double prev_floor = -1.0;
  double first = 0.0, last = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double j = (1.0 + (50.0 - 1.0) * i / 9.0) * t2;
    const double f = truth_table_fidelity(make_cnot_schedule(t2, j, -600.0));
    const double floor = 1.0 - 0.5 * t2 * t2 / (t2 * t2 + 4.0 * j * j);
    CHECK(f >= floor - 1e-12);
    CHECK(floor >= prev_floor);
    prev_floor = floor;
    if (i == 0) first = f;
    last = f;
  }
  CHECK(last > first);
  CHECK(last > 0.999);  // j/t2 = 50 end of the sweep
}

TEST_CASE("ideal closed-form conditional rotations give fidelity 1") {
  // With the far-detuned idle exactly diagonal and the pulse exactly
  // resonant on the control-|0~> branch, an artificial j -> infinity proxy:
  // suppress the off-resonant branch by hand and check the bookkeeping.
  const double t2 = 2.0;
  const TwoQubitSchedule s = cnot_protocol(t2, 200.0 * t2, -1e5);
  CHECK(truth_table_fidelity(s) == doctest::Approx(1.0).epsilon(1e-4));
}
