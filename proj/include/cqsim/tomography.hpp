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

#pragma once

#include <span>
#include <vector>

#include "cqsim/dynamics.hpp"
#include "cqsim/noise.hpp"

namespace cqsim {

/// Choi state of a (possibly noise-averaged) process: a dim^2 x dim^2
/// density matrix over ancilla (x) system, trace one, Hermitian, PSD.
/// The ancilla has the same dimension as the system; for the quadrupole the
/// reference state spans only the logical {C, E} pair, so leakage shows up
/// directly as fidelity loss.
class ProcessMatrix {
 public:
  ProcessMatrix(int system_dim, ComplexMatrix chi);

  int system_dim() const { return system_dim_; }
  const ComplexMatrix& chi() const { return chi_; }

  /// Tr(chi^2); equals 1 exactly for an un-averaged (unitary) process.
  double purity() const;

 private:
  int system_dim_;
  ComplexMatrix chi_;
};

/// |Phi><Phi| with Phi = (|00> + |11>)/sqrt(2) for the dipole and
/// Phi = (|CC> + |EE>)/sqrt(2) for the quadrupole.
ProcessMatrix choi_initial(QubitKind kind);

/// Choi state of the schedule at one fixed noise offset (a pure process).
ProcessMatrix process_at_offsets(const PulseSchedule& schedule, const NoiseOffsets& offsets);

/// Quadrature-averaged Choi state; points are accumulated in ascending
/// delta_eps_d order so results are bit-reproducible.
ProcessMatrix process_of_schedule(const PulseSchedule& schedule,
                                  const QuasistaticNoiseModel& noise);

/// F = Re Tr(ideal * actual), requiring a pure ideal; clamped to [0, 1] only
/// for round-off excursions below 1e-9.
double process_fidelity(const ProcessMatrix& ideal, const ProcessMatrix& actual);

enum class GateChoice { CdBareXpi, CqBareXpi, CqCompositeXpi };

/// Schedule realizing a gate choice.  tunnel_coupling is the physical
/// interdot amplitude: t for the dipole qubit, t_a = t_b for the quadrupole
/// (whose logical coupling is then sqrt(2) times larger).  The composite
/// sequence uses the same t_x with eps_z = 2*pi*t_x.
PulseSchedule gate_schedule(GateChoice gate, double tunnel_coupling);

struct InfidelityPoint {
  double sigma_eps = 0.0;   // GHz
  double infidelity = 0.0;  // 1 - F
};

/// 1 - F of the gate against its own zero-noise process, per sigma in order.
/// The noise template supplies kappa, grid_n and range_sigmas.
std::vector<InfidelityPoint> infidelity_curve(GateChoice gate, std::span<const double> sigmas,
                                              const QuasistaticNoiseModel& noise_template,
                                              double tunnel_coupling = 10.0);

}  // namespace cqsim
