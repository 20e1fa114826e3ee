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

#include "cqsim/qmath.hpp"

namespace cqsim {

/// Control parameters of the triple-dot (charge quadrupole) qubit.
/// Tunnel couplings are real and nonnegative; the logical two-level coupling
/// is (t_a + t_b)/sqrt(2), which equals sqrt(2)*t_a at the symmetric tuning
/// t_a = t_b.
struct CqParams {
  double eps_d = 0.0;  // dipolar detuning, GHz
  double eps_q = 0.0;  // quadrupolar detuning, GHz
  double t_a = 0.0;    // tunnel coupling dot1-dot2, GHz
  double t_b = 0.0;    // tunnel coupling dot2-dot3, GHz

  double t_logical() const;
  void validate() const;

  /// Symmetric tuning t_a = t_b chosen to realize a given logical coupling.
  static CqParams symmetric(double eps_d, double eps_q, double t_logical);
};

/// Control parameters of the double-dot (charge dipole) qubit.
struct CdParams {
  double eps_d = 0.0;  // detuning, GHz
  double t = 0.0;      // tunnel coupling, GHz

  void validate() const;
};

struct SitePotentials {
  double u1 = 0.0, u2 = 0.0, u3 = 0.0;  // GHz
};

struct Detunings {
  double eps_d = 0.0;
  double eps_q = 0.0;
};

/// eps_d = (u1 - u3)/2,  eps_q = u2 - (u1 + u3)/2.
Detunings detunings(const SitePotentials& u);

/// Site potentials reproducing the given detunings with the outer-dot
/// average (u1+u3)/2 fixed to zero.
SitePotentials site_potentials(const Detunings& d);

/// 3x3 Hamiltonian in the position basis {|100>, |010>, |001>}:
///   [[eps_d, t_a, 0], [t_a, eps_q, t_b], [0, t_b, -eps_d]].
/// The additive offset (u1+u3)/2 is fixed to zero; it would only contribute
/// a global phase.
ComplexMatrix h_cq_position(const CqParams& p);

/// 2x2 double-dot Hamiltonian [[eps_d/2, t], [t, -eps_d/2]].
ComplexMatrix h_cd(const CdParams& p);

/// Basis change from the position basis to the ordered even-odd basis
/// {C, E, L} with C = |010>, E = (|100>+|001>)/sqrt(2),
/// L = (|100>-|001>)/sqrt(2).  Off-diagonal closed forms:
/// <C|H|E> = (t_a+t_b)/sqrt(2), <C|H|L> = (t_a-t_b)/sqrt(2), <E|H|L> = eps_d.
ComplexMatrix to_even_odd(const ComplexMatrix& h_pos);

/// Convenience: h_cq in the {C, E, L} basis.
ComplexMatrix h_cq_even_odd(const CqParams& p);

/// Frobenius norm of [H_cq, P13] where P13 permutes the outer dots; zero
/// exactly when t_a = t_b and eps_d = 0.
double symmetry_residual(const CqParams& p);

}  // namespace cqsim
