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

#include "cqsim/cli.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cqsim/calibrate.hpp"
#include "cqsim/geometry.hpp"
#include "cqsim/noise.hpp"
#include "cqsim/spectrum.hpp"
#include "cqsim/tomography.hpp"
#include "cqsim/twoqubit.hpp"

namespace cqsim::cli {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

// Key-set validation: every required key present, nothing outside
// required + optional.  Catches typos before any computation runs.
void check_keys(const json& j, const std::set<std::string>& required,
                const std::set<std::string>& optional) {
  detail::require(j.is_object(), "config must be a JSON object");
  for (const std::string& k : required)
    detail::require(j.contains(k), "missing required config key: " + k);
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (!required.contains(k) && !optional.contains(k))
      detail::fail("unknown config key: " + k);
  }
}

double get_double(const json& j, const std::string& key) {
  detail::require(j.at(key).is_number(), "config key " + key + " must be a number");
  return j.at(key).get<double>();
}

double get_double_or(const json& j, const std::string& key, double fallback) {
  return j.contains(key) ? get_double(j, key) : fallback;
}

int get_int(const json& j, const std::string& key) {
  detail::require(j.at(key).is_number_integer(), "config key " + key + " must be an integer");
  return j.at(key).get<int>();
}

int get_int_or(const json& j, const std::string& key, int fallback) {
  return j.contains(key) ? get_int(j, key) : fallback;
}

std::string get_string(const json& j, const std::string& key) {
  detail::require(j.at(key).is_string(), "config key " + key + " must be a string");
  return j.at(key).get<std::string>();
}

std::string header_comment(const json& config) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_hash(config)));
  return std::string("# cqsim ") + kVersion + " config_hash=" + buf;
}

void write_artifact(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output path: " + path);
  out << contents;
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

std::string json_artifact(const json& config, json body) {
  body["version"] = kVersion;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config_hash(config)));
  body["config_hash"] = buf;
  return body.dump(2) + "\n";
}

QuasistaticNoiseModel noise_from_config(const json& j, double sigma) {
  QuasistaticNoiseModel m;
  m.sigma_eps = sigma;
  m.kappa = get_double_or(j, "kappa", 1.0 / 40.0);
  m.grid_n = get_int_or(j, "grid_n", 41);
  m.range_sigmas = get_double_or(j, "range_sigmas", 6.0);
  m.validate();
  return m;
}

// Runs fn(i) for i in [0, n) on thread_count() workers; callers assemble
// results by index so the outcome is identical for any worker count.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

// --- spectrum ---------------------------------------------------------------

std::string run_spectrum(const json& j) {
  detail::require(j.contains("kind"), "missing required config key: kind");
  const std::string kind = get_string(j, "kind");
  std::ostringstream csv;
  csv << header_comment(j) << "\n";
  if (kind == "cq") {
    check_keys(j, {"command", "kind", "t_a_ghz", "t_b_ghz", "eps_d_ghz", "eps_q_min_ghz",
                   "eps_q_max_ghz", "num_points", "output_path"},
               {"format"});
    const double t_a = get_double(j, "t_a_ghz");
    const double t_b = get_double(j, "t_b_ghz");
    const double eps_d = get_double(j, "eps_d_ghz");
    const double lo = get_double(j, "eps_q_min_ghz");
    const double hi = get_double(j, "eps_q_max_ghz");
    const int n = get_int(j, "num_points");
    detail::require(n >= 2, "num_points must be >= 2");
    detail::require(hi > lo, "eps_q range must be increasing");
    CqParams{eps_d, lo, t_a, t_b}.validate();
    csv << "eps_q_ghz,e0_ghz,e1_ghz,e2_ghz\n";
    for (int i = 0; i < n; ++i) {
      const double eps_q = lo + (hi - lo) * i / (n - 1);
      const EigenDecomposition eig = herm_eig(h_cq_position(CqParams{eps_d, eps_q, t_a, t_b}));
      csv << fmt(eps_q) << "," << fmt(eig.eigenvalues[0]) << "," << fmt(eig.eigenvalues[1])
          << "," << fmt(eig.eigenvalues[2]) << "\n";
    }
  } else if (kind == "cd") {
    check_keys(j, {"command", "kind", "t_ghz", "eps_d_min_ghz", "eps_d_max_ghz", "num_points",
                   "output_path"},
               {"format"});
    const double t = get_double(j, "t_ghz");
    const double lo = get_double(j, "eps_d_min_ghz");
    const double hi = get_double(j, "eps_d_max_ghz");
    const int n = get_int(j, "num_points");
    detail::require(n >= 2, "num_points must be >= 2");
    detail::require(hi > lo, "eps_d range must be increasing");
    CdParams{lo, t}.validate();
    csv << "eps_d_ghz,e0_ghz,e1_ghz\n";
    for (int i = 0; i < n; ++i) {
      const double eps_d = lo + (hi - lo) * i / (n - 1);
      const EigenDecomposition eig = herm_eig(h_cd(CdParams{eps_d, t}));
      csv << fmt(eps_d) << "," << fmt(eig.eigenvalues[0]) << "," << fmt(eig.eigenvalues[1])
          << "\n";
    }
  } else {
    detail::fail("spectrum kind must be \"cd\" or \"cq\"");
  }
  return csv.str();
}

// --- gate -------------------------------------------------------------------

PulseSchedule schedule_from_gate_config(const json& j) {
  const std::string gate = get_string(j, "gate");
  if (gate == "bare_x_cd")
    return gate_schedule(GateChoice::CdBareXpi, get_double_or(j, "tunnel_coupling_ghz", 10.0));
  if (gate == "bare_x_cq")
    return gate_schedule(GateChoice::CqBareXpi, get_double_or(j, "tunnel_coupling_ghz", 10.0));
  if (gate == "composite_x_cq")
    return gate_schedule(GateChoice::CqCompositeXpi, get_double_or(j, "tunnel_coupling_ghz", 10.0));
  if (gate == "custom") {
    if (j.contains("schedule")) return schedule_from_json(j.at("schedule"));
    detail::require(j.contains("schedule_file"), "custom gate needs schedule or schedule_file");
    const std::string path = get_string(j, "schedule_file");
    std::ifstream in(path);
    detail::require(static_cast<bool>(in), "schedule_file does not exist: " + path);
    json doc;
    in >> doc;
    return schedule_from_json(doc);
  }
  detail::fail("gate must be bare_x_cd, bare_x_cq, composite_x_cq or custom");
}

std::string run_gate(const json& j) {
  check_keys(j, {"command", "gate", "sigma_eps_ghz", "output_path"},
             {"tunnel_coupling_ghz", "schedule", "schedule_file", "kappa", "grid_n",
              "range_sigmas", "format"});
  const PulseSchedule schedule = schedule_from_gate_config(j);
  const QuasistaticNoiseModel model = noise_from_config(j, get_double(j, "sigma_eps_ghz"));

  const ProcessMatrix ideal = process_at_offsets(schedule, NoiseOffsets{});
  const ProcessMatrix averaged = process_of_schedule(schedule, model);
  const double fidelity = process_fidelity(ideal, averaged);

  json body;
  body["command"] = "gate";
  body["gate"] = get_string(j, "gate");
  body["sigma_eps_ghz"] = model.sigma_eps;
  body["kappa"] = model.kappa;
  body["grid_n"] = model.grid_n;
  body["range_sigmas"] = model.range_sigmas;
  body["segment_count"] = schedule.segments.size();
  body["total_duration_ns"] = schedule.total_duration();
  body["averaged_fidelity"] = fidelity;
  body["infidelity"] = 1.0 - fidelity;
  body["averaged_purity"] = averaged.purity();
  body["schedule"] = schedule_to_json(schedule);
  return json_artifact(j, std::move(body));
}

// --- sweep ------------------------------------------------------------------

std::vector<double> sigma_list_from_config(const json& j) {
  if (j.contains("sigma_list_ghz")) {
    detail::require(j.at("sigma_list_ghz").is_array() && !j.at("sigma_list_ghz").empty(),
                    "sigma_list_ghz must be a nonempty array");
    std::vector<double> sigmas;
    for (const json& v : j.at("sigma_list_ghz")) {
      detail::require(v.is_number(), "sigma_list_ghz entries must be numbers");
      sigmas.push_back(v.get<double>());
    }
    for (double s : sigmas) detail::require(s > 0.0, "sigma values must be positive");
    return sigmas;
  }
  const double lo = get_double(j, "sigma_min_ghz");
  const double hi = get_double(j, "sigma_max_ghz");
  const int n = get_int_or(j, "num_sigma", 13);
  detail::require(lo > 0.0 && hi > lo, "need 0 < sigma_min_ghz < sigma_max_ghz");
  detail::require(n >= 2, "num_sigma must be >= 2");
  std::vector<double> sigmas(n);
  const double ratio = std::log(hi / lo);
  for (int i = 0; i < n; ++i) sigmas[i] = lo * std::exp(ratio * i / (n - 1));
  return sigmas;
}

std::string run_sweep(const json& j) {
  check_keys(j, {"command", "output_path"},
             {"sigma_list_ghz", "sigma_min_ghz", "sigma_max_ghz", "num_sigma", "kappa",
              "grid_n", "range_sigmas", "tunnel_coupling_ghz", "format"});
  detail::require(j.contains("sigma_list_ghz") ||
                      (j.contains("sigma_min_ghz") && j.contains("sigma_max_ghz")),
                  "sweep needs sigma_list_ghz or sigma_min_ghz/sigma_max_ghz");
  const std::vector<double> sigmas = sigma_list_from_config(j);
  const double coupling = get_double_or(j, "tunnel_coupling_ghz", 10.0);
  const QuasistaticNoiseModel tmpl = noise_from_config(j, sigmas.front());

  const GateChoice gates[3] = {GateChoice::CdBareXpi, GateChoice::CqBareXpi,
                               GateChoice::CqCompositeXpi};
  PulseSchedule schedules[3] = {gate_schedule(gates[0], coupling),
                                gate_schedule(gates[1], coupling),
                                gate_schedule(gates[2], coupling)};
  const ProcessMatrix ideals[3] = {process_at_offsets(schedules[0], NoiseOffsets{}),
                                   process_at_offsets(schedules[1], NoiseOffsets{}),
                                   process_at_offsets(schedules[2], NoiseOffsets{})};

  std::vector<std::array<double, 3>> infidelity(sigmas.size());
  parallel_for(static_cast<int>(sigmas.size()), [&](int i) {
    QuasistaticNoiseModel model = tmpl;
    model.sigma_eps = sigmas[i];
    for (int g = 0; g < 3; ++g) {
      const ProcessMatrix averaged = process_of_schedule(schedules[g], model);
      infidelity[i][g] = 1.0 - process_fidelity(ideals[g], averaged);
    }
  });

  std::ostringstream csv;
  csv << header_comment(j) << "\n";
  csv << "sigma_eps_ghz,infidelity_cd_bare,infidelity_cq_bare,infidelity_cq_composite\n";
  for (size_t i = 0; i < sigmas.size(); ++i) {
    csv << fmt(sigmas[i]) << "," << fmt(infidelity[i][0]) << "," << fmt(infidelity[i][1]) << ","
        << fmt(infidelity[i][2]) << "\n";
  }
  return csv.str();
}

// --- t1rho ------------------------------------------------------------------

std::string run_t1rho(const json& j) {
  check_keys(j, {"command", "eps_ac_ghz", "t_logical_ghz", "s_x_amplitude", "output_path"},
             {"s_z_amplitude", "sweet_spot", "omega_min_rad_per_ns", "format"});
  const double eps_ac = get_double(j, "eps_ac_ghz");
  const double t_logical = get_double(j, "t_logical_ghz");
  const double omega_min = get_double_or(j, "omega_min_rad_per_ns", 1e-6);
  bool sweet_spot = false;
  if (j.contains("sweet_spot")) {
    detail::require(j.at("sweet_spot").is_boolean(), "sweet_spot must be a boolean");
    sweet_spot = j.at("sweet_spot").get<bool>();
  }
  SpectralDensity s_z{sweet_spot ? 0.0 : get_double_or(j, "s_z_amplitude", 0.0), omega_min};
  SpectralDensity s_x{get_double(j, "s_x_amplitude"), omega_min};
  s_z.validate();
  s_x.validate();

  const double rate = t1rho_rate(eps_ac, t_logical, s_z, s_x);
  json body;
  body["command"] = "t1rho";
  body["eps_ac_ghz"] = eps_ac;
  body["t_logical_ghz"] = t_logical;
  body["sweet_spot"] = sweet_spot;
  body["rate_per_ns"] = rate;
  body["t1rho_ns"] = rate > 0.0 ? 1.0 / rate : std::numeric_limits<double>::infinity();
  return json_artifact(j, std::move(body));
}

// --- geometry ---------------------------------------------------------------

Vec2 vec2_from(const json& v, const std::string& what) {
  detail::require(v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(),
                  what + " must be a [x, y] pair of numbers");
  return Vec2{v[0].get<double>(), v[1].get<double>()};
}

std::string run_geometry(const json& j) {
  check_keys(j, {"command", "dot_positions_nm", "fluctuator_positions_nm", "output_path"},
             {"epsilon_r", "format"});
  const json& dots = j.at("dot_positions_nm");
  detail::require(dots.is_array() && dots.size() == 3, "dot_positions_nm must list three dots");
  TripleDotGeometry geometry;
  for (int i = 0; i < 3; ++i) geometry.positions[i] = vec2_from(dots[i], "dot position");
  geometry.validate();

  const json& flucts = j.at("fluctuator_positions_nm");
  detail::require(flucts.is_array() && !flucts.empty(),
                  "fluctuator_positions_nm must be a nonempty array");
  const double epsilon_r = get_double_or(j, "epsilon_r", 11.7);

  std::vector<Fluctuator> fluctuators;
  for (const json& f : flucts)
    fluctuators.push_back(Fluctuator{vec2_from(f, "fluctuator position"), epsilon_r});
  for (const Fluctuator& f : fluctuators) f.validate();

  std::ostringstream csv;
  csv << header_comment(j) << "\n";
  csv << "fluct_x_nm,fluct_y_nm,delta_eps_d_ghz,delta_eps_q_ghz,ratio\n";
  for (const Fluctuator& f : fluctuators) {
    const Detunings d = monopole_detunings(geometry, f);
    csv << fmt(f.position.x) << "," << fmt(f.position.y) << "," << fmt(d.eps_d) << ","
        << fmt(d.eps_q) << "," << fmt(d.eps_q / d.eps_d) << "\n";
  }
  return csv.str();
}

// --- calibrate --------------------------------------------------------------

struct CalibrateOutcome {
  std::string artifact;
  bool converged = false;
};

CalibrateOutcome run_calibrate(const json& j) {
  check_keys(j, {"command", "family", "kind", "bounds", "initial_guess", "output_path"},
             {"t_x_ghz", "eps_z_ghz", "target_angle_rad", "objective_tolerance", "format"});
  const std::string family = get_string(j, "family");
  const std::string kind_name = get_string(j, "kind");
  detail::require(kind_name == "cd" || kind_name == "cq", "kind must be \"cd\" or \"cq\"");
  const QubitKind kind = kind_name == "cd" ? QubitKind::Cd : QubitKind::Cq;

  CalibrationProblem problem;
  problem.objective_tolerance = get_double_or(j, "objective_tolerance", 1e-9);
  detail::require(j.at("bounds").is_array() && !j.at("bounds").empty(),
                  "bounds must be a nonempty array of [lo, hi] pairs");
  for (const json& b : j.at("bounds")) {
    detail::require(b.is_array() && b.size() == 2 && b[0].is_number() && b[1].is_number(),
                    "each bound must be a [lo, hi] pair");
    problem.bounds.emplace_back(b[0].get<double>(), b[1].get<double>());
  }
  detail::require(j.at("initial_guess").is_array() &&
                      j.at("initial_guess").size() == problem.bounds.size(),
                  "initial_guess must match the number of bounds");
  std::vector<double> guess;
  for (const json& g : j.at("initial_guess")) {
    detail::require(g.is_number(), "initial_guess entries must be numbers");
    guess.push_back(g.get<double>());
  }

  ScheduleBuilder builder;
  const double angle = get_double_or(j, "target_angle_rad", kPi);
  detail::require(angle != 0.0, "target_angle_rad must be nonzero");
  if (family == "x_duration") {
    detail::require(j.contains("t_x_ghz"), "family x_duration needs t_x_ghz");
    const double t_x = get_double(j, "t_x_ghz");
    detail::require(t_x > 0.0, "t_x_ghz must be positive");
    problem.target = ComplexMatrix(
        2, {std::cos(0.5 * angle), Complex(0.0, -std::sin(0.5 * angle)),
            Complex(0.0, -std::sin(0.5 * angle)), std::cos(0.5 * angle)});
    builder = [t_x, kind](std::span<const double> x) {
      PulseSegment seg;
      seg.duration = x[0];
      if (kind == QubitKind::Cd) {
        seg.params = CdParams{0.0, t_x};
      } else {
        seg.params = CqParams::symmetric(0.0, 0.0, t_x);
      }
      PulseSchedule s;
      s.kind = kind;
      s.segments = {seg};
      return s;
    };
  } else if (family == "z_duration") {
    detail::require(j.contains("eps_z_ghz"), "family z_duration needs eps_z_ghz");
    const double eps_z = get_double(j, "eps_z_ghz");
    detail::require(eps_z != 0.0, "eps_z_ghz must be nonzero");
    problem.target = ComplexMatrix(2, {std::polar(1.0, -0.5 * angle), 0.0,
                                       0.0, std::polar(1.0, 0.5 * angle)});
    builder = [eps_z, kind](std::span<const double> x) {
      PulseSegment seg;
      seg.duration = x[0];
      if (kind == QubitKind::Cd) {
        seg.params = CdParams{eps_z, 0.0};
      } else {
        seg.params = CqParams{0.0, eps_z, 0.0, 0.0};
      }
      PulseSchedule s;
      s.kind = kind;
      s.segments = {seg};
      return s;
    };
  } else {
    detail::fail("family must be \"x_duration\" or \"z_duration\"");
  }

  for (const auto& [lo, hi] : problem.bounds)
    detail::require(lo >= 0.0 && hi >= lo, "duration bounds must be nonnegative");

  const CalibrationResult result =
      calibrate_gate(problem, builder, std::span<const double>(guess.data(), guess.size()));

  json body;
  body["command"] = "calibrate";
  body["family"] = family;
  body["kind"] = kind_name;
  body["parameters"] = result.parameters;
  body["objective"] = result.objective;
  body["converged"] = result.converged;
  body["iterations"] = result.iterations;
  return CalibrateOutcome{json_artifact(j, std::move(body)), result.converged};
}

// --- twoqubit ---------------------------------------------------------------

std::string run_twoqubit(const json& j) {
  check_keys(j, {"command", "t2_ghz", "j_ghz", "far_detuning_ghz", "output_path"}, {"format"});
  const double t2 = get_double(j, "t2_ghz");
  const double coupling = get_double(j, "j_ghz");
  const double far = get_double(j, "far_detuning_ghz");
  const TwoQubitSchedule schedule = cnot_protocol(t2, coupling, far);
  const auto populations = transfer_populations(schedule);
  const double fidelity = truth_table_fidelity(schedule);

  static const char* kLabels[4] = {"00", "01", "10", "11"};
  std::ostringstream csv;
  csv << header_comment(j) << "\n";
  csv << "# truth_table_fidelity=" << fmt(fidelity) << "\n";
  csv << "input,p_out_00,p_out_01,p_out_10,p_out_11\n";
  for (int in = 0; in < 4; ++in) {
    csv << kLabels[in];
    for (int out = 0; out < 4; ++out) csv << "," << fmt(populations[in][out]);
    csv << "\n";
  }
  return csv.str();
}

}  // namespace

std::uint64_t config_hash(const json& config) {
  const std::string canonical = config.dump();
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a offset basis
  for (unsigned char c : canonical) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

int thread_count() {
  const char* env = std::getenv("CQSIM_THREADS");
  if (env == nullptr) return 1;
  const int n = std::atoi(env);
  return n > 0 ? n : 1;
}

int run(const json& config, std::ostream& err) {
  try {
    detail::require(config.is_object() && config.contains("command"),
                    "config must be an object with a \"command\" key");
    const std::string command = get_string(config, "command");
    detail::require(config.contains("output_path"), "missing required config key: output_path");
    const std::string output_path = get_string(config, "output_path");

    if (config.contains("format")) {
      const std::string format = get_string(config, "format");
      const bool csv_command = command == "spectrum" || command == "sweep" ||
                               command == "geometry" || command == "twoqubit";
      detail::require(format == (csv_command ? "csv" : "json"),
                      "command " + command + " emits " + (csv_command ? "csv" : "json"));
    }

    std::string artifact;
    int exit_code = kExitOk;
    if (command == "spectrum") {
      artifact = run_spectrum(config);
    } else if (command == "gate") {
      artifact = run_gate(config);
    } else if (command == "sweep") {
      artifact = run_sweep(config);
    } else if (command == "t1rho") {
      artifact = run_t1rho(config);
    } else if (command == "geometry") {
      artifact = run_geometry(config);
    } else if (command == "calibrate") {
      CalibrateOutcome outcome = run_calibrate(config);
      artifact = std::move(outcome.artifact);
      if (!outcome.converged) exit_code = kExitNotConverged;
    } else if (command == "twoqubit") {
      artifact = run_twoqubit(config);
    } else {
      detail::fail("unknown command: " + command);
    }

    write_artifact(output_path, artifact);
    return exit_code;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
}

int run_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "config error: cannot open config file: " << path << "\n";
    return kExitConfigError;
  }
  json config;
  try {
    in >> config;
  } catch (const std::exception& e) {
    err << "config error: invalid JSON in " << path << ": " << e.what() << "\n";
    return kExitConfigError;
  }
  return run(config, err);
}

}  // namespace cqsim::cli
