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

#include "cqsim/dynamics.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

namespace cqsim {

void Drive::validate() const {
  detail::require(eps_ac >= 0.0, "drive amplitude must be nonnegative");
  detail::require(max_step > 0.0, "drive max_step must be positive");
  if (nu > 0.0)
    detail::require(max_step <= 1.0 / (20.0 * nu),
                    "drive max_step too large: need max_step <= 1/(20 nu)");
}

QubitKind PulseSegment::kind() const {
  return std::holds_alternative<CdParams>(params) ? QubitKind::Cd : QubitKind::Cq;
}

void PulseSegment::validate() const {
  detail::require(duration >= 0.0, "segment duration must be nonnegative");
  std::visit([](const auto& p) { p.validate(); }, params);
  if (drive) drive->validate();
}

double PulseSchedule::total_duration() const {
  double total = 0.0;
  for (const PulseSegment& s : segments) total += s.duration;
  return total;
}

void PulseSchedule::validate() const {
  for (const PulseSegment& s : segments) {
    detail::require(s.kind() == kind, "segment kind does not match schedule kind");
    s.validate();
  }
}

ComplexMatrix segment_hamiltonian(const PulseSegment& seg, const NoiseOffsets& noise,
                                  double drive_value) {
  if (const CdParams* cd = std::get_if<CdParams>(&seg.params)) {
    return h_cd(CdParams{cd->eps_d + noise.delta_eps_d + drive_value, cd->t});
  }
  const CqParams& cq = std::get<CqParams>(seg.params);
  return h_cq_even_odd(CqParams{cq.eps_d + noise.delta_eps_d,
                                cq.eps_q + noise.delta_eps_q + drive_value,
                                cq.t_a, cq.t_b});
}

namespace {

ComplexMatrix driven_segment_unitary(const PulseSegment& seg, const NoiseOffsets& noise) {
  const Drive& drive = *seg.drive;
  drive.validate();
  if (seg.duration == 0.0) return ComplexMatrix::identity(seg.kind() == QubitKind::Cd ? 2 : 3);
  const int steps = std::max(1, static_cast<int>(std::ceil(seg.duration / drive.max_step)));
  const double dt = seg.duration / steps;
  ComplexMatrix u = ComplexMatrix::identity(seg.kind() == QubitKind::Cd ? 2 : 3);
  for (int k = 0; k < steps; ++k) {
    const double t_mid = (k + 0.5) * dt;
    const double value = drive.eps_ac * std::cos(kTwoPi * drive.nu * t_mid + drive.phase);
    u = expm_unitary(segment_hamiltonian(seg, noise, value), dt) * u;
  }
  return u;
}

void check_density_matrix(const ComplexMatrix& rho, int expected_dim) {
  detail::require(rho.dim() == expected_dim, "density matrix dimension does not match schedule kind");
  detail::require(rho.hermiticity_defect() <= 1e-10, "density matrix is not Hermitian");
  detail::require(std::abs(rho.trace() - Complex(1.0)) <= 1e-10, "density matrix trace is not 1");
  const EigenDecomposition eig = herm_eig(rho);
  detail::require(eig.eigenvalues.front() > -1e-8, "density matrix is not positive semidefinite");
}

}  // namespace

ComplexMatrix segment_unitary(const PulseSegment& seg, const NoiseOffsets& noise) {
  seg.validate();
  if (seg.drive) return driven_segment_unitary(seg, noise);
  return expm_unitary(segment_hamiltonian(seg, noise), seg.duration);
}

ComplexMatrix schedule_unitary(const PulseSchedule& schedule, const NoiseOffsets& noise) {
  schedule.validate();
  ComplexMatrix u = ComplexMatrix::identity(schedule.kind == QubitKind::Cd ? 2 : 3);
  for (const PulseSegment& seg : schedule.segments) u = segment_unitary(seg, noise) * u;
  return u;
}

ComplexMatrix evolve(const ComplexMatrix& rho0, const PulseSchedule& schedule,
                     const NoiseOffsets& noise) {
  schedule.validate();
  check_density_matrix(rho0, schedule.kind == QubitKind::Cd ? 2 : 3);
  ComplexMatrix rho = rho0;
  for (const PulseSegment& seg : schedule.segments)
    rho = conjugate_with(segment_unitary(seg, noise), rho);
  return rho;
}

ComplexMatrix evolve_driven(const ComplexMatrix& rho0, const PulseSegment& seg,
                            const NoiseOffsets& noise) {
  seg.validate();
  detail::require(seg.drive.has_value(), "evolve_driven expects a segment with a drive");
  check_density_matrix(rho0, seg.kind() == QubitKind::Cd ? 2 : 3);
  return conjugate_with(driven_segment_unitary(seg, noise), rho0);
}

PulseSegment gate_x(double alpha, double t_x, QubitKind kind) {
  detail::require(alpha > 0.0, "rotation angle must be positive");
  detail::require(t_x > 0.0, "x gate needs a positive coupling");
  const double duration = alpha / (2.0 * kTwoPi * t_x);
  PulseSegment seg;
  seg.duration = duration;
  if (kind == QubitKind::Cd) {
    seg.params = CdParams{0.0, t_x};
  } else {
    seg.params = CqParams::symmetric(0.0, 0.0, t_x);
  }
  return seg;
}

PulseSegment gate_z(double beta, double eps_z, QubitKind kind) {
  detail::require(beta != 0.0, "rotation angle must be nonzero");
  detail::require(eps_z != 0.0, "z gate needs a nonzero detuning");
  const double eps_eff = (beta < 0.0) ? -eps_z : eps_z;
  const double duration = std::abs(beta) / (kTwoPi * std::abs(eps_z));
  PulseSegment seg;
  seg.duration = duration;
  if (kind == QubitKind::Cd) {
    seg.params = CdParams{eps_eff, 0.0};
  } else {
    seg.params = CqParams{0.0, eps_eff, 0.0, 0.0};
  }
  return seg;
}

PulseSchedule bare_xpi(double t_x, QubitKind kind) {
  PulseSchedule s;
  s.kind = kind;
  s.segments = {gate_x(kPi, t_x, kind)};
  return s;
}

PulseSchedule composite_xpi(double eps_z) {
  detail::require(eps_z > 0.0, "composite sequence needs eps_z > 0");
  const double t_x = eps_z / kTwoPi;
  PulseSchedule s;
  s.kind = QubitKind::Cq;
  s.segments = {gate_z(-kTwoPi, eps_z, QubitKind::Cq),
                gate_x(3.0 * kPi, t_x, QubitKind::Cq),
                gate_z(kTwoPi, eps_z, QubitKind::Cq)};
  return s;
}

nlohmann::json schedule_to_json(const PulseSchedule& schedule) {
  schedule.validate();
  nlohmann::json doc = nlohmann::json::array();
  for (const PulseSegment& seg : schedule.segments) {
    nlohmann::json j;
    if (const CdParams* cd = std::get_if<CdParams>(&seg.params)) {
      j["kind"] = "cd";
      j["eps_d"] = cd->eps_d;
      j["t"] = cd->t;
    } else {
      const CqParams& cq = std::get<CqParams>(seg.params);
      j["kind"] = "cq";
      j["eps_d"] = cq.eps_d;
      j["eps_q"] = cq.eps_q;
      j["t_a"] = cq.t_a;
      j["t_b"] = cq.t_b;
    }
    j["duration_ns"] = seg.duration;
    if (seg.drive) {
      j["eps_ac"] = seg.drive->eps_ac;
      j["nu"] = seg.drive->nu;
      j["phase"] = seg.drive->phase;
      j["max_step_ns"] = seg.drive->max_step;
    }
    doc.push_back(std::move(j));
  }
  return doc;
}

PulseSchedule schedule_from_json(const nlohmann::json& doc) {
  detail::require(doc.is_array() && !doc.empty(), "schedule document must be a nonempty array");
  PulseSchedule schedule;
  bool first = true;
  for (const nlohmann::json& j : doc) {
    detail::require(j.is_object(), "schedule segment must be an object");
    detail::require(j.contains("kind") && j.at("kind").is_string(), "segment needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    PulseSegment seg;
    if (kind == "cd") {
      seg.params = CdParams{j.at("eps_d").get<double>(), j.at("t").get<double>()};
    } else if (kind == "cq") {
      seg.params = CqParams{j.at("eps_d").get<double>(), j.at("eps_q").get<double>(),
                            j.at("t_a").get<double>(), j.at("t_b").get<double>()};
    } else {
      detail::fail("segment kind must be \"cd\" or \"cq\"");
    }
    seg.duration = j.at("duration_ns").get<double>();
    if (j.contains("eps_ac")) {
      Drive d;
      d.eps_ac = j.at("eps_ac").get<double>();
      d.nu = j.at("nu").get<double>();
      d.phase = j.at("phase").get<double>();
      d.max_step = j.at("max_step_ns").get<double>();
      seg.drive = d;
    }
    if (first) {
      schedule.kind = seg.kind();
      first = false;
    }
    schedule.segments.push_back(std::move(seg));
  }
  schedule.validate();
  return schedule;
}

}  // namespace cqsim
