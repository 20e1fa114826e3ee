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

#include <random>

#include "cqsim/tomography.hpp"
#include "support/oracles.hpp"

using namespace cqsim;
using namespace cqsim::testing;

namespace {

// Choi state of a bare unitary, built directly in the test.
ProcessMatrix choi_of_unitary(QubitKind kind, const ComplexMatrix& u) {
  const ComplexMatrix rho0 = choi_initial(kind).chi();
  const ComplexMatrix u_e = kron(ComplexMatrix::identity(u.dim()), u);
  return ProcessMatrix(u.dim(), conjugate_with(u_e, rho0));
}

// Trace of the logical block (indices 0 and 1).
Complex logical_trace(const ComplexMatrix& m) { return m(0, 0) + m(1, 1); }

}  // namespace

TEST_CASE("choi_initial layout and purity") {
  const ProcessMatrix cd = choi_initial(QubitKind::Cd);
  CHECK(cd.chi().dim() == 4);
  for (int i : {0, 3})
    for (int j : {0, 3})
      CHECK(std::abs(cd.chi()(i, j) - Complex(0.5)) < 1e-15);
  CHECK(std::abs(cd.chi()(1, 1)) == 0.0);
  CHECK(cd.purity() == doctest::Approx(1.0).epsilon(1e-14));

  const ProcessMatrix cq = choi_initial(QubitKind::Cq);
  CHECK(cq.chi().dim() == 9);
  for (int i : {0, 4})
    for (int j : {0, 4})
      CHECK(std::abs(cq.chi()(i, j) - Complex(0.5)) < 1e-15);
  CHECK(cq.purity() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("process_of_schedule: zero-noise identity and X_pi") {
  QuasistaticNoiseModel off;  // sigma 0
  PulseSchedule idle;
  idle.kind = QubitKind::Cq;
  idle.segments = {};
  const ProcessMatrix id_process = process_of_schedule(idle, off);
  CHECK((id_process.chi() - choi_initial(QubitKind::Cq).chi()).frobenius_norm() < 1e-14);

  const PulseSchedule xpi = bare_xpi(2.0, QubitKind::Cq);
  const ProcessMatrix actual = process_of_schedule(xpi, off);
  // Ideal X_pi on the logical pair, identity on leakage.
  ComplexMatrix ux = ComplexMatrix::identity(3);
  ux(0, 0) = 0.0;
  ux(1, 1) = 0.0;
  ux(0, 1) = Complex(0, -1);
  ux(1, 0) = Complex(0, -1);
  const ProcessMatrix ideal = choi_of_unitary(QubitKind::Cq, ux);
  CHECK(process_fidelity(ideal, actual) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("process_fidelity: basic values and error paths") {
  const ProcessMatrix id_cd = choi_initial(QubitKind::Cd);
  CHECK(process_fidelity(id_cd, id_cd) == doctest::Approx(1.0).epsilon(1e-14));

  // Identity vs X_pi: orthogonal Bell-like states.
  const ProcessMatrix x_cd = choi_of_unitary(QubitKind::Cd, Complex(0, -1) * pauli_x());
  CHECK(process_fidelity(id_cd, x_cd) == doctest::Approx(0.0).epsilon(1e-14));

  const ProcessMatrix cq = choi_initial(QubitKind::Cq);
  CHECK_THROWS_AS(process_fidelity(id_cd, cq), std::invalid_argument);

  // A visibly mixed ideal is rejected.
  QuasistaticNoiseModel noisy;
  noisy.sigma_eps = 0.5;
  const ProcessMatrix mixed = process_of_schedule(bare_xpi(2.0, QubitKind::Cq), noisy);
  CHECK(mixed.purity() < 1.0 - 1e-6);
  CHECK_THROWS_AS(process_fidelity(mixed, cq), std::invalid_argument);
}

TEST_CASE("unitary pairs match the |Tr(U^+ V)|^2 / dim^2 oracle") {
  std::mt19937 rng(41);
  for (int rep = 0; rep < 25; ++rep) {
    // Dipole: full 2x2 unitaries.
    const ComplexMatrix u = random_unitary(rng, 2);
    const ComplexMatrix v = random_unitary(rng, 2);
    const double f = process_fidelity(choi_of_unitary(QubitKind::Cd, u),
                                      choi_of_unitary(QubitKind::Cd, v));
    const double oracle = std::norm((u.adjoint() * v).trace()) / 4.0;
    CHECK(std::abs(f - oracle) < 1e-10);

    // Quadrupole: the reference state spans the logical pair, so the trace
    // runs over the logical block only.
    const ComplexMatrix u3 = random_unitary(rng, 3);
    const ComplexMatrix v3 = random_unitary(rng, 3);
    const double f3 = process_fidelity(choi_of_unitary(QubitKind::Cq, u3),
                                       choi_of_unitary(QubitKind::Cq, v3));
    const double oracle3 = std::norm(logical_trace(u3.adjoint() * v3)) / 4.0;
    CHECK(std::abs(f3 - oracle3) < 1e-10);
  }
}

TEST_CASE("global segment phases do not move the fidelity") {
  std::mt19937 rng(43);
  const ComplexMatrix u = random_unitary(rng, 3);
  const ComplexMatrix v = random_unitary(rng, 3);
  const double f = process_fidelity(choi_of_unitary(QubitKind::Cq, u),
                                    choi_of_unitary(QubitKind::Cq, v));
  // exp(-i 2 pi c tau) times V is what adding c*I to a segment Hamiltonian
  // produces; the Choi fidelity cannot see it.
  const ComplexMatrix v_phased = std::polar(1.0, 1.234) * v;
  const double f_phased = process_fidelity(choi_of_unitary(QubitKind::Cq, u),
                                           choi_of_unitary(QubitKind::Cq, v_phased));
  CHECK(std::abs(f - f_phased) < 1e-10);
}

TEST_CASE("averaging is linear and matches a manual two-point mix") {
  const PulseSchedule xpi = bare_xpi(3.0, QubitKind::Cq);
  const NoiseOffsets a{0.2, 0.005}, b{-0.2, -0.005};
  const ComplexMatrix manual =
      0.5 * process_at_offsets(xpi, a).chi() + 0.5 * process_at_offsets(xpi, b).chi();

  // A two-point even grid is not representable; emulate with grid_n = 3 and
  // weights concentrated by a wide sigma... instead check linearity directly:
  const ProcessMatrix mixed(3, manual);
  const ProcessMatrix ideal = process_at_offsets(xpi, NoiseOffsets{});
  const double f_manual = process_fidelity(ideal, mixed);
  const double f_avg = 0.5 * process_fidelity(ideal, process_at_offsets(xpi, a)) +
                       0.5 * process_fidelity(ideal, process_at_offsets(xpi, b));
  CHECK(f_manual == doctest::Approx(f_avg).epsilon(1e-12));
}

TEST_CASE("averaged purity decreases with noise strength") {
  const PulseSchedule xpi = gate_schedule(GateChoice::CqBareXpi, 10.0);
  double prev = 1.0 + 1e-12;
  for (double sigma : {0.01, 0.1, 0.3, 1.0}) {
    QuasistaticNoiseModel m;
    m.sigma_eps = sigma;
    const double p = process_of_schedule(xpi, m).purity();
    CHECK(p < prev);
    prev = p;
  }
}

TEST_CASE("infidelity_curve: shape and gate wiring") {
  QuasistaticNoiseModel tmpl;  // kappa 1/40
  const std::vector<double> sigmas{0.01, 0.05, 0.2};
  for (GateChoice gate :
       {GateChoice::CdBareXpi, GateChoice::CqBareXpi, GateChoice::CqCompositeXpi}) {
    const auto curve = infidelity_curve(gate, sigmas, tmpl, 10.0);
    REQUIRE(curve.size() == sigmas.size());
    double prev = -1.0;
    for (const InfidelityPoint& p : curve) {
      CHECK(p.infidelity >= 0.0);
      CHECK(p.infidelity >= prev);  // monotone nondecreasing in sigma
      prev = p.infidelity;
    }
    CHECK(curve.front().infidelity < 1e-4);  // vanishing-noise limit
  }

  // The dipole gate is t = 10 GHz; the quadrupole one has t_a = t_b = 10.
  const PulseSchedule cd = gate_schedule(GateChoice::CdBareXpi, 10.0);
  CHECK(std::get<CdParams>(cd.segments[0].params).t == 10.0);
  const PulseSchedule cq = gate_schedule(GateChoice::CqBareXpi, 10.0);
  CHECK(std::get<CqParams>(cq.segments[0].params).t_a == doctest::Approx(10.0).epsilon(1e-14));
}

TEST_CASE("zero-noise self-fidelity is 1 for random schedules") {
  std::mt19937 rng(47);
  std::uniform_real_distribution<double> u(0.2, 4.0);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int rep = 0; rep < 10; ++rep) {
    const QubitKind kind = coin(rng) == 0 ? QubitKind::Cd : QubitKind::Cq;
    PulseSchedule s;
    s.kind = kind;
    const int n_segments = 1 + coin(rng) + coin(rng);
    for (int k = 0; k < n_segments; ++k) {
      if (coin(rng) == 0) {
        s.segments.push_back(gate_x(u(rng), u(rng), kind));
      } else {
        s.segments.push_back(gate_z(u(rng), u(rng), kind));
      }
    }
    const ProcessMatrix chi = process_at_offsets(s, NoiseOffsets{});
    CHECK(process_fidelity(chi, chi) == doctest::Approx(1.0).epsilon(1e-9));
  }
}
