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

#include <optional>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cqsim/model.hpp"

namespace cqsim {

enum class QubitKind { Cd, Cq };

/// Sinusoidal modulation of the gate detuning (eps_q for the quadrupole,
/// eps_d for the dipole) on top of a segment's constant parameters:
///   eps(t) = eps_bar + eps_ac * cos(2*pi*nu*t + phase).
/// Integrated by piecewise-constant midpoint sampling with steps <= max_step.
struct Drive {
  double eps_ac = 0.0;    // GHz
  double nu = 0.0;        // GHz
  double phase = 0.0;     // rad
  double max_step = 0.0;  // ns

  void validate() const;
};

/// One piecewise-constant control segment; parameters switch instantaneously
/// between segments (ideal square pulses, no rise time).
struct PulseSegment {
  std::variant<CdParams, CqParams> params;
  double duration = 0.0;  // ns
  std::optional<Drive> drive;

  QubitKind kind() const;
  void validate() const;
};

struct PulseSchedule {
  QubitKind kind = QubitKind::Cq;
  std::vector<PulseSegment> segments;

  double total_duration() const;
  void validate() const;  // every segment must carry the schedule's kind
};

/// Quasistatic detuning offsets, held constant across all segments of one
/// schedule realization.  delta_eps_q is ignored by dipole schedules.
struct NoiseOffsets {
  double delta_eps_d = 0.0;  // GHz
  double delta_eps_q = 0.0;  // GHz
};

/// Hamiltonian of one segment with noise folded into the detunings and an
/// optional instantaneous drive value added to the gate detuning.  Quadrupole
/// segments are expressed in the ordered {C, E, L} basis.
ComplexMatrix segment_hamiltonian(const PulseSegment& seg, const NoiseOffsets& noise,
                                  double drive_value = 0.0);

/// Propagator of one segment (midpoint-sampled when driven).
ComplexMatrix segment_unitary(const PulseSegment& seg, const NoiseOffsets& noise);

/// Product of segment propagators, first segment rightmost.
ComplexMatrix schedule_unitary(const PulseSchedule& schedule, const NoiseOffsets& noise);

/// Density-matrix evolution through a schedule: rho -> U_k ... U_1 rho U_1^+ ... U_k^+.
/// rho0 must be Hermitian, PSD and trace one, with dimension 2 (dipole) or
/// 3 (quadrupole, {C, E, L} ordering).
ComplexMatrix evolve(const ComplexMatrix& rho0, const PulseSchedule& schedule,
                     const NoiseOffsets& noise);

/// Single driven segment; identical to evolve() when eps_ac = 0.
ComplexMatrix evolve_driven(const ComplexMatrix& rho0, const PulseSegment& seg,
                            const NoiseOffsets& noise);

/// X rotation by angle alpha: gate detuning zero, coupling t_x, duration
/// alpha / (4*pi*t_x).
PulseSegment gate_x(double alpha, double t_x, QubitKind kind);

/// Z rotation by angle beta: couplings off, gate detuning sign(beta)*eps_z,
/// duration |beta| / (2*pi*|eps_z|).  Passing a negative eps_z flips the
/// rotation sense, as does a negative beta.
PulseSegment gate_z(double beta, double eps_z, QubitKind kind);

/// Single-segment bare X_pi schedule.
PulseSchedule bare_xpi(double t_x, QubitKind kind);

/// Composite quadrupole X_pi: Z(-2pi), then X(3pi) at t_x = eps_z/(2*pi),
/// then Z(+2pi).  Equals X_pi up to a global phase at zero noise and cancels
/// the leading-order dipolar detuning error.
PulseSchedule composite_xpi(double eps_z);

nlohmann::json schedule_to_json(const PulseSchedule& schedule);
PulseSchedule schedule_from_json(const nlohmann::json& doc);

}  // namespace cqsim
