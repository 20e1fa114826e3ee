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

#include <vector>

#include "cqsim/common.hpp"

namespace cqsim {

/// Quasistatic Gaussian charge-noise model: the dipolar offset delta_eps_d is
/// drawn from N(0, sigma_eps^2), discretized on grid_n equally spaced points
/// over +-range_sigmas*sigma, and the quadrupolar offset is perfectly
/// correlated, delta_eps_q = kappa * delta_eps_d.
struct QuasistaticNoiseModel {
  double sigma_eps = 0.0;       // GHz, std. dev. of delta_eps_d
  double kappa = 1.0 / 40.0;    // delta_eps_q / delta_eps_d
  int grid_n = 41;              // odd, so delta_eps_d = 0 is sampled
  double range_sigmas = 6.0;

  void validate() const;
};

struct QuadraturePoint {
  double delta_eps_d = 0.0;  // GHz
  double delta_eps_q = 0.0;  // GHz
  double weight = 0.0;       // normalized; the full grid sums to 1
};

/// Deterministic quadrature grid in ascending delta_eps_d order.  Weights are
/// proportional to the Gaussian density and renormalized to sum to one;
/// sigma_eps = 0 collapses to the single point (0, 0, 1).
std::vector<QuadraturePoint> quadrature_grid(const QuasistaticNoiseModel& m);

/// 1/omega spectral density with a low-frequency cutoff:
/// S(omega) = amplitude / max(|omega|, omega_min), omega in rad/ns.
/// Negative arguments are evaluated at |omega| (classical symmetric noise);
/// the cutoff keeps the value finite at exact resonance.
struct SpectralDensity {
  double amplitude = 0.0;   // GHz^2 * ns
  double omega_min = 1e-6;  // rad/ns

  void validate() const;
  double operator()(double omega) const;
};

/// Rotating-frame longitudinal decay rate during resonant driving:
///   1/T1rho = 2 S_z(w_ac) + S_x(w_ac + w_2t) + S_x(w_ac - w_2t)
/// with w_ac = 2*pi*eps_ac and w_2t = 2*pi*2*t_logical in rad/ns.
double t1rho_rate(double eps_ac, double t_logical, const SpectralDensity& s_z,
                  const SpectralDensity& s_x);

/// kappa^p: suppression of the quadrupole qubit's driven decoherence rate
/// relative to the dipole qubit when the quadrupolar noise amplitude is
/// kappa times the dipolar one.  p = 1 treats the rate as linear in the
/// amplitude ratio; p = 2 treats it as linear in the spectral density
/// (amplitude squared).  Exposed as a parameter because either reading is
/// defensible; no default is taken.
double rate_ratio_cq_cd(double kappa, int p);

}  // namespace cqsim
