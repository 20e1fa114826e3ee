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

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cqsim/tomography.hpp"

namespace cqsim {

/// Leading noise-sensitivity coefficient c_k of a schedule:
/// 1 - F(delta_eps_d) ~ c_k * delta_eps_d^k around zero, with the quadrupolar
/// component off (kappa = 0).  Computed from Richardson-extrapolated central
/// differences at steps h and h/2, h = 1e-3 * (largest segment coupling).
/// order must be 2 or 4.  Throws if the extrapolation is unstable while the
/// coefficient is significant; an extrapolated coefficient tiny against the
/// raw stencil values is accepted as a cancelled (effectively zero) order.
double sensitivity_coefficient(const PulseSchedule& schedule, int order);

struct CalibrationProblem {
  ComplexMatrix target;                            // 2x2 logical unitary
  std::vector<std::pair<double, double>> bounds;   // per-parameter [lo, hi]
  double objective_tolerance = 1e-9;

  void validate() const;
};

using ScheduleBuilder = std::function<PulseSchedule(std::span<const double>)>;

struct CalibrationResult {
  std::vector<double> parameters;
  double objective = 0.0;    // 1 - F at the returned parameters
  bool converged = false;
  int iterations = 0;
};

/// Derivative-free Nelder-Mead search over the bounded parameter box,
/// minimizing 1 - F(target process, zero-noise process of the built
/// schedule).  Evaluation points are clamped into the box, the returned
/// objective never exceeds the initial guess's, and equal-objective
/// candidates are broken toward the shorter total schedule duration.
/// Convergence: objective below tolerance, or relative simplex diameter
/// below 1e-6, within 500 iterations.
CalibrationResult calibrate_gate(const CalibrationProblem& problem,
                                 const ScheduleBuilder& builder,
                                 std::span<const double> initial_guess);

}  // namespace cqsim
