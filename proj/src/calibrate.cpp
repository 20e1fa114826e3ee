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

#include "cqsim/calibrate.hpp"

#include <algorithm>
#include <cmath>

namespace cqsim {

namespace {

double segment_coupling(const PulseSegment& seg) {
  if (const CdParams* cd = std::get_if<CdParams>(&seg.params)) return cd->t;
  return std::get<CqParams>(seg.params).t_logical();
}

double schedule_coupling_scale(const PulseSchedule& s) {
  double scale = 0.0;
  for (const PulseSegment& seg : s.segments) scale = std::max(scale, segment_coupling(seg));
  return scale > 0.0 ? scale : 1.0;
}

// Choi state of a logical 2x2 unitary, embedded on the leakage level as
// identity for quadrupole schedules (the reference state has no leakage
// component, so that choice is immaterial).
ProcessMatrix target_process(const ComplexMatrix& target, QubitKind kind) {
  ComplexMatrix u = target;
  if (kind == QubitKind::Cq) {
    ComplexMatrix embedded = ComplexMatrix::identity(3);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) embedded(i, j) = target(i, j);
    embedded(2, 2) = 1.0;
    u = embedded;
  }
  const int dim = u.dim();
  ComplexMatrix rho = choi_initial(kind).chi();
  const ComplexMatrix u_e = kron(ComplexMatrix::identity(dim), u);
  return ProcessMatrix(dim, conjugate_with(u_e, rho));
}

}  // namespace

double sensitivity_coefficient(const PulseSchedule& schedule, int order) {
  detail::require(order == 2 || order == 4, "sensitivity order must be 2 or 4");
  schedule.validate();
  const ProcessMatrix ideal = process_at_offsets(schedule, NoiseOffsets{});
  auto g = [&](double delta) {
    return 1.0 - process_fidelity(ideal, process_at_offsets(schedule, NoiseOffsets{delta, 0.0}));
  };
  detail::require(g(0.0) <= 1e-10, "schedule must reproduce its own zero-noise process");

  const double h = 1e-3 * schedule_coupling_scale(schedule);
  double g_peak = 0.0;
  auto raw = [&](double hh) {
    if (order == 2) {
      const double gp = g(hh), gm = g(-hh);
      g_peak = std::max({g_peak, std::abs(gp), std::abs(gm)});
      return (gp + gm) / (2.0 * hh * hh);
    }
    // c4 = f''''(0)/24 from the five-point stencil, using g(0) = 0.
    const double g2p = g(2.0 * hh), gp = g(hh), gm = g(-hh), g2m = g(-2.0 * hh);
    g_peak = std::max({g_peak, std::abs(g2p), std::abs(gp), std::abs(gm), std::abs(g2m)});
    return (g2p - 4.0 * gp - 4.0 * gm + g2m) / (24.0 * hh * hh * hh * hh);
  };

  const double c_h = raw(h);
  const double c_h2 = raw(0.5 * h);
  // Stencil values at the fidelity round-off floor mean the coefficient is
  // indistinguishable from zero at this order.
  if (g_peak <= 1e-13) return 0.0;
  const double extrapolated = (4.0 * c_h2 - c_h) / 3.0;
  const bool smooth = std::abs(c_h - c_h2) <= 0.05 * std::abs(c_h2);
  // When the order is exactly cancelled the raw stencils are dominated by the
  // next order (ratio 4 between steps) and the extrapolation collapses to
  // zero; accept that as convergence to a negligible coefficient.
  const bool cancelled = std::abs(extrapolated) <= 0.05 * (std::abs(c_h) + std::abs(c_h2)) + 1e-300;
  if (!smooth && !cancelled)
    throw std::runtime_error("sensitivity extrapolation did not converge");
  return extrapolated;
}

void CalibrationProblem::validate() const {
  detail::require(!bounds.empty(), "calibration problem needs at least one parameter bound");
  for (const auto& [lo, hi] : bounds)
    detail::require(lo <= hi, "calibration bound has lo > hi");
  detail::require(target.dim() == 2, "calibration target must be a 2x2 logical unitary");
  const ComplexMatrix defect = target.adjoint() * target - ComplexMatrix::identity(2);
  detail::require(defect.frobenius_norm() < 1e-10, "calibration target must be unitary");
  detail::require(objective_tolerance > 0.0, "objective tolerance must be positive");
}

namespace {

using Point = std::vector<double>;

void clamp_into(const std::vector<std::pair<double, double>>& bounds, Point& x) {
  for (size_t i = 0; i < x.size(); ++i)
    x[i] = std::min(bounds[i].second, std::max(bounds[i].first, x[i]));
}

double simplex_diameter(const std::vector<Point>& pts) {
  double d = 0.0;
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = a + 1; b < pts.size(); ++b)
      for (size_t i = 0; i < pts[a].size(); ++i)
        d = std::max(d, std::abs(pts[a][i] - pts[b][i]));
  return d;
}

}  // namespace

CalibrationResult calibrate_gate(const CalibrationProblem& problem, const ScheduleBuilder& builder,
                                 std::span<const double> initial_guess) {
  problem.validate();
  const size_t n = problem.bounds.size();
  detail::require(initial_guess.size() == n, "initial guess size does not match bounds");

  struct Best {
    Point x;
    double f = 2.0;
    double duration = 0.0;
  } best;

  auto objective = [&](const Point& x) {
    const PulseSchedule schedule = builder(std::span<const double>(x.data(), x.size()));
    const ProcessMatrix zero_noise = process_at_offsets(schedule, NoiseOffsets{});
    const ProcessMatrix target = target_process(problem.target, schedule.kind);
    const double f = 1.0 - process_fidelity(target, zero_noise);
    const double duration = schedule.total_duration();
    // Ties between equal objectives go to the shorter schedule.
    if (f < best.f - 1e-15 || (std::abs(f - best.f) <= 1e-15 && duration < best.duration)) {
      best = Best{x, f, duration};
    }
    return f;
  };

  Point x0(initial_guess.begin(), initial_guess.end());
  clamp_into(problem.bounds, x0);

  std::vector<Point> simplex{x0};
  for (size_t i = 0; i < n; ++i) {
    Point xi = x0;
    const double span = problem.bounds[i].second - problem.bounds[i].first;
    double step = span > 0.0 ? 0.1 * span : 0.1 * std::max(1.0, std::abs(x0[i]));
    if (xi[i] + step > problem.bounds[i].second) step = -step;
    xi[i] += step;
    clamp_into(problem.bounds, xi);
    simplex.push_back(std::move(xi));
  }
  std::vector<double> values(simplex.size());
  for (size_t i = 0; i < simplex.size(); ++i) values[i] = objective(simplex[i]);

  constexpr int kMaxIterations = 500;
  int iter = 0;
  for (; iter < kMaxIterations; ++iter) {
    std::vector<size_t> order(simplex.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    {
      std::vector<Point> sorted_pts(simplex.size());
      std::vector<double> sorted_vals(simplex.size());
      for (size_t i = 0; i < order.size(); ++i) {
        sorted_pts[i] = simplex[order[i]];
        sorted_vals[i] = values[order[i]];
      }
      simplex = std::move(sorted_pts);
      values = std::move(sorted_vals);
    }

    // Stop on tolerance or simplex collapse; whether the run "converged" is
    // judged against the objective tolerance below.
    if (values.front() <= problem.objective_tolerance) break;
    double scale = 1.0;
    for (double v : simplex.front()) scale = std::max(scale, std::abs(v));
    if (simplex_diameter(simplex) < 1e-6 * scale) break;

    const size_t worst = simplex.size() - 1;
    Point centroid(n, 0.0);
    for (size_t i = 0; i < worst; ++i)
      for (size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(worst);

    auto affine = [&](double coeff) {
      Point x(n);
      for (size_t k = 0; k < n; ++k) x[k] = centroid[k] + coeff * (centroid[k] - simplex[worst][k]);
      clamp_into(problem.bounds, x);
      return x;
    };

    const Point reflected = affine(1.0);
    const double f_reflected = objective(reflected);
    if (f_reflected < values.front()) {
      const Point expanded = affine(2.0);
      const double f_expanded = objective(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[worst - 1]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Point contracted = affine(outside ? 0.5 : -0.5);
    const double f_contracted = objective(contracted);
    if (f_contracted < std::min(f_reflected, values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    // Shrink toward the best vertex.
    for (size_t i = 1; i < simplex.size(); ++i) {
      for (size_t k = 0; k < n; ++k)
        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
      clamp_into(problem.bounds, simplex[i]);
      values[i] = objective(simplex[i]);
    }
  }

  CalibrationResult result;
  result.parameters = best.x;
  result.objective = best.f;
  result.converged = best.f <= problem.objective_tolerance;
  result.iterations = iter;
  return result;
}

}  // namespace cqsim
