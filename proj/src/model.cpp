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

#include "cqsim/model.hpp"

#include <cmath>

namespace cqsim {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Rows are the C, E, L bras expressed in the position basis.
ComplexMatrix even_odd_change_of_basis() {
  return ComplexMatrix(3, {0, 1, 0,                     // <C|
                           kInvSqrt2, 0, kInvSqrt2,     // <E|
                           kInvSqrt2, 0, -kInvSqrt2});  // <L|
}

}  // namespace

double CqParams::t_logical() const { return (t_a + t_b) * kInvSqrt2; }

void CqParams::validate() const {
  detail::require(t_a >= 0.0 && t_b >= 0.0, "tunnel couplings must be nonnegative");
}

CqParams CqParams::symmetric(double eps_d, double eps_q, double t_logical) {
  detail::require(t_logical >= 0.0, "logical coupling must be nonnegative");
  const double t_each = t_logical * kInvSqrt2;
  return CqParams{eps_d, eps_q, t_each, t_each};
}

void CdParams::validate() const {
  detail::require(t >= 0.0, "tunnel coupling must be nonnegative");
}

Detunings detunings(const SitePotentials& u) {
  return Detunings{0.5 * (u.u1 - u.u3), u.u2 - 0.5 * (u.u1 + u.u3)};
}

SitePotentials site_potentials(const Detunings& d) {
  return SitePotentials{d.eps_d, d.eps_q, -d.eps_d};
}

ComplexMatrix h_cq_position(const CqParams& p) {
  p.validate();
  return ComplexMatrix(3, {p.eps_d, p.t_a, 0,
                           p.t_a, p.eps_q, p.t_b,
                           0, p.t_b, -p.eps_d});
}

ComplexMatrix h_cd(const CdParams& p) {
  p.validate();
  return ComplexMatrix(2, {0.5 * p.eps_d, p.t,
                           p.t, -0.5 * p.eps_d});
}

ComplexMatrix to_even_odd(const ComplexMatrix& h_pos) {
  detail::require(h_pos.dim() == 3, "even-odd basis change expects a 3x3 Hamiltonian");
  const double tol = 1e-10 * std::max(1.0, h_pos.max_abs());
  detail::require(h_pos.hermiticity_defect() <= tol, "even-odd basis change expects a Hermitian input");
  const ComplexMatrix v = even_odd_change_of_basis();
  return v * h_pos * v.adjoint();
}

ComplexMatrix h_cq_even_odd(const CqParams& p) { return to_even_odd(h_cq_position(p)); }

double symmetry_residual(const CqParams& p) {
  const ComplexMatrix h = h_cq_position(p);
  const ComplexMatrix p13(3, {0, 0, 1,
                              0, 1, 0,
                              1, 0, 0});
  return (h * p13 - p13 * h).frobenius_norm();
}

}  // namespace cqsim
