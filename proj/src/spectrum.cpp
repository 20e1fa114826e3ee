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

#include "cqsim/spectrum.hpp"

#include <cmath>
#include <functional>

namespace cqsim {

namespace {

// Bisection for the odd, monotone-near-zero derivative profiles of the
// splittings.  Stops once |derivative| < 1e-8 or the bracket collapses.
double bisect_derivative_zero(const std::function<double(double)>& deriv, double bracket) {
  double lo = -bracket, hi = bracket;
  double flo = deriv(lo);
  double fhi = deriv(hi);
  detail::require(flo <= 0.0 && fhi >= 0.0, "derivative does not bracket a zero");
  double mid = 0.0;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    const double fm = deriv(mid);
    if (std::abs(fm) < 1e-8 || hi - lo < 1e-14 * std::max(1.0, bracket)) return mid;
    if (fm > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return mid;
}

}  // namespace

double splitting_cd(double eps_d, double t) { return std::hypot(eps_d, 2.0 * t); }

double splitting_cq_exact(const CqParams& p) {
  const EigenDecomposition eig = herm_eig(h_cq_position(p));
  return eig.eigenvalues.back() - eig.eigenvalues.front();
}

SplittingExpansion expansion_cd(double eps_d_bar, double t) {
  detail::require(t >= 0.0, "tunnel coupling must be nonnegative");
  detail::require(!(t == 0.0 && eps_d_bar == 0.0), "degenerate expansion point: t = 0 and eps_d_bar = 0");
  const double s2 = eps_d_bar * eps_d_bar + 4.0 * t * t;
  const double s = std::sqrt(s2);
  SplittingExpansion out;
  out.constant = s;
  out.linear_coeff = eps_d_bar / s;
  out.quadratic_coeff = 2.0 * t * t / (s2 * s);
  out.which_linear = SplittingExpansion::LinearVariable::DeltaEpsD;
  return out;
}

SplittingExpansion expansion_cq(double eps_q_bar, double t_logical) {
  detail::require(t_logical > 0.0, "logical coupling must be positive");
  const double s2 = eps_q_bar * eps_q_bar + 4.0 * t_logical * t_logical;
  const double s = std::sqrt(s2);
  SplittingExpansion out;
  out.constant = s;
  out.linear_coeff = eps_q_bar / s;
  out.quadratic_coeff = (eps_q_bar * eps_q_bar + 2.0 * t_logical * t_logical) /
                        (t_logical * t_logical * s);
  out.which_linear = SplittingExpansion::LinearVariable::DeltaEpsQ;
  return out;
}

double leakage_overlap(double delta_eps_d, double t_logical) {
  detail::require(delta_eps_d != 0.0 || t_logical != 0.0,
                  "leakage overlap undefined for a fully degenerate chain");
  // Even-odd Hamiltonian at eps_q_bar = 0 with symmetric couplings:
  // [[0, t, 0], [t, 0, d], [0, d, 0]].  The middle eigenvector is the
  // perturbed leakage state; its C component gives the overlap.
  const ComplexMatrix h(3, {0, t_logical, 0,
                            t_logical, 0, delta_eps_d,
                            0, delta_eps_d, 0});
  const EigenDecomposition eig = herm_eig(h);
  return std::norm(eig.eigenvectors(0, 1));
}

double find_sweet_spot_cd(double t) {
  detail::require(t > 0.0, "tunnel coupling must be positive");
  const double h = 1e-4 * std::max(t, 1.0);
  auto deriv = [&](double eps) {
    return (splitting_cd(eps + h, t) - splitting_cd(eps - h, t)) / (2.0 * h);
  };
  return bisect_derivative_zero(deriv, 2.0 * t + 1.0);
}

std::pair<double, double> find_sweet_spots_cq(double t_logical) {
  detail::require(t_logical > 0.0, "logical coupling must be positive");
  const double h = 1e-4 * std::max(t_logical, 1.0);
  auto deriv_d = [&](double eps_d) {
    return (splitting_cq_exact(CqParams::symmetric(eps_d + h, 0.0, t_logical)) -
            splitting_cq_exact(CqParams::symmetric(eps_d - h, 0.0, t_logical))) /
           (2.0 * h);
  };
  auto deriv_q = [&](double eps_q) {
    return (splitting_cq_exact(CqParams::symmetric(0.0, eps_q + h, t_logical)) -
            splitting_cq_exact(CqParams::symmetric(0.0, eps_q - h, t_logical))) /
           (2.0 * h);
  };
  const double bracket = 2.0 * t_logical + 1.0;
  return {bisect_derivative_zero(deriv_d, bracket), bisect_derivative_zero(deriv_q, bracket)};
}

}  // namespace cqsim
