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

#include "cqsim/twoqubit.hpp"

#include <cmath>

namespace cqsim {

void LogicalQubitParams::validate() const {
  detail::require(t >= 0.0, "logical coupling must be nonnegative");
}

void TwoQubitParams::validate() const {
  q1.validate();
  q2.validate();
}

void TwoQubitSchedule::validate() const {
  for (const TwoQubitSegment& seg : segments) {
    detail::require(seg.duration >= 0.0, "segment duration must be nonnegative");
    seg.params.validate();
  }
}

namespace {

ComplexMatrix h_logical(const LogicalQubitParams& p) {
  return ComplexMatrix(2, {p.eps_q, p.t,
                           p.t, 0.0});
}

}  // namespace

ComplexMatrix h_two_qubit(const TwoQubitParams& p) {
  p.validate();
  const ComplexMatrix eye = ComplexMatrix::identity(2);
  return kron(h_logical(p.q1), eye) + kron(eye, h_logical(p.q2)) +
         p.j * kron(pauli_z(), pauli_z());
}

TwoQubitSchedule make_cnot_schedule(double t2, double j, double far_detuning) {
  detail::require(t2 > 0.0, "target coupling t2 must be positive");
  const double tau_pulse = 1.0 / (4.0 * t2);
  const LogicalQubitParams idle{far_detuning, 0.0};
  TwoQubitSchedule s;
  s.segments = {
      TwoQubitSegment{TwoQubitParams{idle, idle, j}, tau_pulse},
      TwoQubitSegment{TwoQubitParams{idle, LogicalQubitParams{-2.0 * j, t2}, j}, tau_pulse},
      TwoQubitSegment{TwoQubitParams{idle, idle, j}, tau_pulse},
  };
  return s;
}

TwoQubitSchedule cnot_protocol(double t2, double j, double far_detuning) {
  detail::require(t2 > 0.0, "target coupling t2 must be positive");
  detail::require(j >= 10.0 * t2,
                  "coupling too weak: j < 10*t2 lets the control-|1~> branch leak beyond "
                  "the 1/401 conditional-error budget");
  detail::require(far_detuning <= -10.0 * std::max(j, t2),
                  "far_detuning must sit well below -10*max(j, t2)");
  return make_cnot_schedule(t2, j, far_detuning);
}

ComplexMatrix schedule_unitary(const TwoQubitSchedule& schedule) {
  schedule.validate();
  ComplexMatrix u = ComplexMatrix::identity(4);
  for (const TwoQubitSegment& seg : schedule.segments)
    u = expm_unitary(h_two_qubit(seg.params), seg.duration) * u;
  return u;
}

std::array<std::array<double, 4>, 4> transfer_populations(const TwoQubitSchedule& schedule) {
  const ComplexMatrix u = schedule_unitary(schedule);
  std::array<std::array<double, 4>, 4> m{};
  for (int in = 0; in < 4; ++in)
    for (int out = 0; out < 4; ++out) m[in][out] = std::norm(u(out, in));
  return m;
}

double truth_table_fidelity(const TwoQubitSchedule& schedule) {
  const auto populations = transfer_populations(schedule);
  double total = 0.0;
  for (int control = 0; control < 2; ++control) {
    for (int target = 0; target < 2; ++target) {
      const int in = 2 * control + target;
      const int flipped = (control == 0) ? 1 - target : target;
      const int out = 2 * control + flipped;
      total += populations[in][out];
    }
  }
  return total / 4.0;
}

}  // namespace cqsim
