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

#include <array>
#include <vector>

#include "cqsim/qmath.hpp"

namespace cqsim {

/// Logical (two-level) quadrupole parameters used by the capacitive
/// two-qubit model: h = (eps_q/2)(1 + sigma_z) + t sigma_x in {C, E}.
struct LogicalQubitParams {
  double eps_q = 0.0;  // GHz
  double t = 0.0;      // GHz

  void validate() const;
};

struct TwoQubitParams {
  LogicalQubitParams q1;
  LogicalQubitParams q2;
  double j = 0.0;  // GHz, sigma_z1 sigma_z2 coupling

  void validate() const;
};

/// H = h1 (x) I + I (x) h2 + J sigma_z (x) sigma_z on {C,E} (x) {C,E}.
/// The model lives entirely in the 2 (x) 2 logical subspace; leakage during
/// two-qubit gates is out of scope.
ComplexMatrix h_two_qubit(const TwoQubitParams& p);

struct TwoQubitSegment {
  TwoQubitParams params;
  double duration = 0.0;  // ns
};

struct TwoQubitSchedule {
  std::vector<TwoQubitSegment> segments;

  void validate() const;
};

/// Pulsed CNOT-style schedule without parameter checks (used to study the
/// degraded regime j < 10 t2): idle far-detuned, then a qubit-2 pulse with
/// eps_q2 = -2j and coupling t2 for 1/(4 t2), then idle again.  The -2j
/// compensation brings the control-|0~> (sigma_z = +1) branch to zero
/// effective detuning, so only that branch hosts a resonant X_pi.
TwoQubitSchedule make_cnot_schedule(double t2, double j, double far_detuning);

/// Validated protocol: requires j >= 10*t2 (otherwise the conditional
/// leak-through t2^2/(t2^2 + 4j^2) exceeds the error budget) and
/// far_detuning <= -10*max(j, t2).
TwoQubitSchedule cnot_protocol(double t2, double j, double far_detuning);

ComplexMatrix schedule_unitary(const TwoQubitSchedule& schedule);

/// M[in][out] = |<out|U|in>|^2 over the computational basis
/// {|0~0~>, |0~1~>, |1~0~>, |1~1~>} with |0~> = |C>, |1~> = |E>.
std::array<std::array<double, 4>, 4> transfer_populations(const TwoQubitSchedule& schedule);

/// Mean population on the CNOT-mapped output over the four computational
/// inputs; the target flips when the control is |0~>.  Phases are ignored.
double truth_table_fidelity(const TwoQubitSchedule& schedule);

}  // namespace cqsim
