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

#include <utility>

#include "cqsim/model.hpp"

namespace cqsim {

/// Qubit splitting expanded around a working point as
///   E01(delta) ~ constant + linear_coeff * delta + quadratic_coeff * delta^2.
/// For the dipole qubit both variations are in delta_eps_d; for the
/// quadrupole qubit the linear variable is delta_eps_q while the quadratic
/// one is delta_eps_d (the linear delta_eps_d term vanishes by symmetry).
struct SplittingExpansion {
  enum class LinearVariable { DeltaEpsD, DeltaEpsQ };
  double constant = 0.0;         // GHz
  double linear_coeff = 0.0;     // dimensionless
  double quadratic_coeff = 0.0;  // 1/GHz
  LinearVariable which_linear = LinearVariable::DeltaEpsD;
};

/// sqrt(eps_d^2 + 4 t^2), the exact dipole-qubit splitting.
double splitting_cd(double eps_d, double t);

/// Highest-minus-lowest eigenvalue of the full 3x3 quadrupole Hamiltonian;
/// those two levels are the logical ones, the middle level is leakage.
double splitting_cq_exact(const CqParams& p);

/// Dipole splitting expansion about eps_d_bar:
///   constant  = sqrt(eps_d_bar^2 + 4 t^2)
///   linear    = eps_d_bar / (eps_d_bar^2 + 4 t^2)^(1/2)
///   quadratic = 2 t^2 / (eps_d_bar^2 + 4 t^2)^(3/2)
SplittingExpansion expansion_cd(double eps_d_bar, double t);

/// Quadrupole splitting expansion about (eps_d_bar = 0, eps_q_bar):
///   constant  = sqrt(eps_q_bar^2 + 4 t^2)
///   linear    (in delta_eps_q) = eps_q_bar / (eps_q_bar^2 + 4 t^2)^(1/2)
///   quadratic (in delta_eps_d) = (eps_q_bar^2 + 2 t^2)
///                                / (t^2 (eps_q_bar^2 + 4 t^2)^(1/2))
SplittingExpansion expansion_cq(double eps_q_bar, double t_logical);

/// |<L~|C>|^2 for the symmetric quadrupole at eps_q_bar = 0 with a dipolar
/// offset delta_eps_d, computed from the exact middle eigenvector; equals
/// delta_eps_d^2 / (delta_eps_d^2 + t^2).
double leakage_overlap(double delta_eps_d, double t_logical);

/// Zero of the numeric d(splitting)/d(eps_d) located by bisection;
/// returns the dipole sweet spot (0 for any t > 0).
double find_sweet_spot_cd(double t);

/// (eps_d*, eps_q*) zeros of the numeric first derivatives of the exact
/// quadrupole splitting along each detuning axis; (0, 0) for any t > 0.
std::pair<double, double> find_sweet_spots_cq(double t_logical);

}  // namespace cqsim
