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

#include "cqsim/noise.hpp"

#include <cmath>

namespace cqsim {

void QuasistaticNoiseModel::validate() const {
  detail::require(sigma_eps >= 0.0, "sigma_eps must be nonnegative");
  detail::require(grid_n >= 1, "grid_n must be >= 1");
  detail::require(grid_n % 2 == 1, "grid_n must be odd so that delta_eps_d = 0 is sampled");
  detail::require(range_sigmas > 0.0, "range_sigmas must be positive");
}

std::vector<QuadraturePoint> quadrature_grid(const QuasistaticNoiseModel& m) {
  m.validate();
  if (m.sigma_eps == 0.0 || m.grid_n == 1) return {QuadraturePoint{0.0, 0.0, 1.0}};

  const int mid = m.grid_n / 2;
  const double step = m.range_sigmas * m.sigma_eps / mid;
  std::vector<QuadraturePoint> grid(m.grid_n);
  double total = 0.0;
  for (int i = 0; i < m.grid_n; ++i) {
    // (i - mid) * step keeps the grid exactly antisymmetric in floating point.
    const double delta = (i - mid) * step;
    const double w = std::exp(-0.5 * delta * delta / (m.sigma_eps * m.sigma_eps));
    grid[i] = QuadraturePoint{delta, m.kappa * delta, w};
    total += w;
  }
  for (QuadraturePoint& p : grid) p.weight /= total;
  return grid;
}

void SpectralDensity::validate() const {
  detail::require(amplitude >= 0.0, "spectral amplitude must be nonnegative");
  detail::require(omega_min > 0.0, "omega_min must be positive");
}

double SpectralDensity::operator()(double omega) const {
  validate();
  return amplitude / std::max(std::abs(omega), omega_min);
}

double t1rho_rate(double eps_ac, double t_logical, const SpectralDensity& s_z,
                  const SpectralDensity& s_x) {
  detail::require(eps_ac >= 0.0, "drive amplitude must be nonnegative");
  detail::require(t_logical > 0.0, "logical coupling must be positive");
  const double w_ac = kTwoPi * eps_ac;
  const double w_2t = kTwoPi * 2.0 * t_logical;
  return 2.0 * s_z(w_ac) + s_x(w_ac + w_2t) + s_x(w_ac - w_2t);
}

double rate_ratio_cq_cd(double kappa, int p) {
  detail::require(kappa > 0.0 && kappa <= 1.0, "kappa must lie in (0, 1]");
  detail::require(p == 1 || p == 2, "scaling exponent must be 1 or 2");
  return p == 1 ? kappa : kappa * kappa;
}

}  // namespace cqsim
