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

#include "cqsim/geometry.hpp"

#include <cmath>

namespace cqsim {

namespace {

// CODATA values.
constexpr double kElementaryCharge = 1.602176634e-19;   // C
constexpr double kPlanck = 6.62607015e-34;              // J s
constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
constexpr double kElectronMass = 9.1093837015e-31;      // kg

// h / m_e in nm^2/ns (1 m^2/s = 1e9 nm^2/ns).
constexpr double kPlanckOverElectronMassNm2PerNs = kPlanck / kElectronMass * 1e9;

double distance(const Vec2& a, const Vec2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

Vec2 TripleDotGeometry::axis() const {
  const double dx = positions[2].x - positions[0].x;
  const double dy = positions[2].y - positions[0].y;
  const double len = std::hypot(dx, dy);
  detail::require(len > 0.0, "outer dots coincide; array axis undefined");
  return Vec2{dx / len, dy / len};
}

double TripleDotGeometry::spacing() const {
  // Mean adjacent spacing of the axis projections equals half the outer-dot
  // projected separation.
  const Vec2 u = axis();
  const double x1 = positions[0].x * u.x + positions[0].y * u.y;
  const double x3 = positions[2].x * u.x + positions[2].y * u.y;
  return 0.5 * (x3 - x1);
}

void TripleDotGeometry::validate() const {
  detail::require(distance(positions[0], positions[1]) > 0.0 &&
                      distance(positions[1], positions[2]) > 0.0 &&
                      distance(positions[0], positions[2]) > 0.0,
                  "dots must be distinct");
  detail::require(spacing() > 0.0, "interdot spacing must be positive");
}

void Fluctuator::validate() const {
  detail::require(relative_permittivity > 0.0, "relative permittivity must be positive");
}

double coulomb_constant_ghz_nm(double relative_permittivity) {
  detail::require(relative_permittivity > 0.0, "relative permittivity must be positive");
  // e^2/(4 pi eps0 h) lands in Hz*m, numerically equal to GHz*nm.
  return kElementaryCharge * kElementaryCharge /
         (4.0 * kPi * kVacuumPermittivity * kPlanck * relative_permittivity);
}

Detunings monopole_detunings(const TripleDotGeometry& g, const Fluctuator& f) {
  g.validate();
  f.validate();
  const double k = coulomb_constant_ghz_nm(f.relative_permittivity);
  double r[3];
  for (int i = 0; i < 3; ++i) {
    r[i] = distance(g.positions[i], f.position);
    detail::require(r[i] > 0.0, "fluctuator coincides with a dot");
  }
  // Differences of the 1/r site potentials, regrouped so the O(d/R) and
  // O((d/R)^2) combinations are formed from distance differences instead of
  // near-equal potentials; the naive form loses the quadrupolar part to
  // cancellation once R >> d.
  const double eps_d = 0.5 * k * (r[2] - r[0]) / (r[0] * r[2]);
  const double eps_q =
      0.5 * k * ((r[0] - r[1]) / (r[0] * r[1]) + (r[2] - r[1]) / (r[1] * r[2]));
  return Detunings{eps_d, eps_q};
}

double asymmetry_quadrupole(const TripleDotGeometry& g, double delta_e) {
  g.validate();
  const Vec2 u = g.axis();
  double x[3];
  for (int i = 0; i < 3; ++i) x[i] = g.positions[i].x * u.x + g.positions[i].y * u.y;
  return (-x[1] + 0.5 * (x[0] + x[2])) * delta_e;
}

double site_energy_first_order(double x_nm, double delta_e) { return -x_nm * delta_e; }

OscillatorResponse shifted_oscillator_terms(double omega_rad_per_ns, double delta_e,
                                            double effective_mass_ratio) {
  detail::require(omega_rad_per_ns > 0.0, "confinement frequency must be positive");
  detail::require(effective_mass_ratio > 0.0, "effective mass must be positive");
  const double h_over_m = kPlanckOverElectronMassNm2PerNs / effective_mass_ratio;
  const double shift = h_over_m * delta_e / (omega_rad_per_ns * omega_rad_per_ns);
  return OscillatorResponse{shift, -0.5 * delta_e * shift};
}

double field_to_ghz_per_nm(double field_v_per_m) {
  // e * field / h, expressed per nm and in GHz.
  return kElementaryCharge * field_v_per_m / kPlanck * 1e-18;
}

}  // namespace cqsim
