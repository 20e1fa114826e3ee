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

#include "cqsim/model.hpp"

namespace cqsim {

struct Vec2 {
  double x = 0.0;  // nm
  double y = 0.0;  // nm
};

/// Planar triple-dot layout (2D subband approximation).  The array axis runs
/// from dot 1 to dot 3; the interdot spacing d is the mean adjacent spacing
/// of the axis projections.
struct TripleDotGeometry {
  std::array<Vec2, 3> positions;  // nm

  Vec2 axis() const;      // unit vector along dot1 -> dot3
  double spacing() const; // d, nm
  void validate() const;  // dots distinct, d > 0
};

/// Point-charge (monopole) fluctuator, V(r) = e^2 / (4 pi eps0 eps_r r).
/// The permittivity default is silicon (11.7); GaAs would be 12.9.
struct Fluctuator {
  Vec2 position;                        // nm
  double relative_permittivity = 11.7;

  void validate() const;
};

/// e^2 / (4 pi eps0 eps_r h) in GHz*nm, the monopole potential prefactor.
double coulomb_constant_ghz_nm(double relative_permittivity);

/// Detuning offsets induced by a monopole fluctuator: site potentials
/// V_i = k / r_i combined into (delta_eps_d, delta_eps_q).  For an on-axis
/// fluctuator at distance R from the center dot (nearest dot 1) the ratio
/// delta_eps_q / delta_eps_d equals -d/R exactly.
Detunings monopole_detunings(const TripleDotGeometry& g, const Fluctuator& f);

/// Quadrupolar detuning generated by a uniform field fluctuation delta_e
/// along the array axis when the dots are not equally spaced:
///   delta_eps_q = (-x2 + (x1 + x3)/2) * delta_e,
/// with x_i the axis projections.  delta_e carries the electron charge
/// already, in GHz/nm (see field_to_ghz_per_nm); equal spacing gives zero.
double asymmetry_quadrupole(const TripleDotGeometry& g, double delta_e);

/// -x * delta_e: leading-order site-energy shift of a dot centered at axis
/// coordinate x, independent of its confinement strength.
double site_energy_first_order(double x_nm, double delta_e);

struct OscillatorResponse {
  double position_shift_nm = 0.0;    // (e / m omega^2) * dE
  double quadratic_energy_ghz = 0.0; // -e^2 dE^2 / (2 m omega^2)
};

/// Harmonic-dot response to a uniform field: center shift and the
/// field-squared energy term, both scaling as 1/omega^2.  The effective mass
/// is given in electron masses (0.19 for silicon; GaAs would be 0.067).
OscillatorResponse shifted_oscillator_terms(double omega_rad_per_ns, double delta_e,
                                            double effective_mass_ratio = 0.19);

/// Converts a field in V/m to the e-premultiplied energy gradient in GHz/nm.
double field_to_ghz_per_nm(double field_v_per_m);

}  // namespace cqsim
