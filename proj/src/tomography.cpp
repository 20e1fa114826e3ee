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

#include "cqsim/tomography.hpp"

#include <cmath>

namespace cqsim {

namespace {

int kind_dim(QubitKind kind) { return kind == QubitKind::Cd ? 2 : 3; }

}  // namespace

ProcessMatrix::ProcessMatrix(int system_dim, ComplexMatrix chi)
    : system_dim_(system_dim), chi_(std::move(chi)) {
  detail::require(system_dim == 2 || system_dim == 3, "system dimension must be 2 or 3");
  detail::require(chi_.dim() == system_dim * system_dim, "chi must be dim^2 x dim^2");
  detail::require(std::abs(chi_.trace() - Complex(1.0)) < 1e-10, "chi trace must be 1");
  detail::require(chi_.hermiticity_defect() < 1e-10, "chi must be Hermitian");
  const EigenDecomposition eig = herm_eig(chi_);
  detail::require(eig.eigenvalues.front() > -1e-8, "chi must be positive semidefinite");
}

double ProcessMatrix::purity() const { return std::real((chi_ * chi_).trace()); }

ProcessMatrix choi_initial(QubitKind kind) {
  const int dim = kind_dim(kind);
  ComplexVector phi(static_cast<size_t>(dim) * dim, Complex{});
  const double amp = 1.0 / std::sqrt(2.0);
  // |00> + |11> over ancilla (x) system; for the quadrupole these are the
  // logical pair |CC> and |EE> in the {C, E, L} ordering.
  phi[0] = amp;
  phi[dim + 1] = amp;
  return ProcessMatrix(dim, outer(phi));
}

ProcessMatrix process_at_offsets(const PulseSchedule& schedule, const NoiseOffsets& offsets) {
  const int dim = kind_dim(schedule.kind);
  const ComplexMatrix eye = ComplexMatrix::identity(dim);
  ComplexMatrix rho_e = choi_initial(schedule.kind).chi();
  for (const PulseSegment& seg : schedule.segments) {
    const ComplexMatrix u_e = kron(eye, segment_unitary(seg, offsets));
    rho_e = conjugate_with(u_e, rho_e);
  }
  return ProcessMatrix(dim, std::move(rho_e));
}

ProcessMatrix process_of_schedule(const PulseSchedule& schedule,
                                  const QuasistaticNoiseModel& noise) {
  schedule.validate();
  const int dim = kind_dim(schedule.kind);
  ComplexMatrix averaged(dim * dim);
  for (const QuadraturePoint& pt : quadrature_grid(noise)) {
    const ProcessMatrix pure =
        process_at_offsets(schedule, NoiseOffsets{pt.delta_eps_d, pt.delta_eps_q});
    averaged += pt.weight * pure.chi();
  }
  return ProcessMatrix(dim, std::move(averaged));
}

double process_fidelity(const ProcessMatrix& ideal, const ProcessMatrix& actual) {
  detail::require(ideal.system_dim() == actual.system_dim(), "process dimension mismatch");
  detail::require(ideal.purity() >= 1.0 - 1e-8, "ideal process must be pure (rank 1)");
  const double f = std::real((ideal.chi() * actual.chi()).trace());
  if (f < -1e-9 || f > 1.0 + 1e-9)
    throw std::runtime_error("process fidelity outside [0,1] beyond round-off");
  return std::min(1.0, std::max(0.0, f));
}

PulseSchedule gate_schedule(GateChoice gate, double tunnel_coupling) {
  detail::require(tunnel_coupling > 0.0, "tunnel coupling must be positive");
  switch (gate) {
    case GateChoice::CdBareXpi:
      return bare_xpi(tunnel_coupling, QubitKind::Cd);
    case GateChoice::CqBareXpi:
      return bare_xpi(std::sqrt(2.0) * tunnel_coupling, QubitKind::Cq);
    case GateChoice::CqCompositeXpi:
      return composite_xpi(kTwoPi * std::sqrt(2.0) * tunnel_coupling);
  }
  detail::fail("unknown gate choice");
}

std::vector<InfidelityPoint> infidelity_curve(GateChoice gate, std::span<const double> sigmas,
                                              const QuasistaticNoiseModel& noise_template,
                                              double tunnel_coupling) {
  const PulseSchedule schedule = gate_schedule(gate, tunnel_coupling);
  const ProcessMatrix ideal = process_at_offsets(schedule, NoiseOffsets{});
  std::vector<InfidelityPoint> out;
  out.reserve(sigmas.size());
  for (double sigma : sigmas) {
    QuasistaticNoiseModel model = noise_template;
    model.sigma_eps = sigma;
    const ProcessMatrix actual = process_of_schedule(schedule, model);
    out.push_back(InfidelityPoint{sigma, 1.0 - process_fidelity(ideal, actual)});
  }
  return out;
}

}  // namespace cqsim
