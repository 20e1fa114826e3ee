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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cqsim/cli.hpp"

namespace {

using nlohmann::json;

// Loads --config (when given), forces the subcommand name, and applies
// command-line overrides on top.
int run_with_config(const std::string& command, const std::string& config_path,
                    const json& overrides) {
  json config = json::object();
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) {
      std::cerr << "config error: cannot open config file: " << config_path << "\n";
      return cqsim::cli::kExitConfigError;
    }
    try {
      in >> config;
    } catch (const std::exception& e) {
      std::cerr << "config error: invalid JSON in " << config_path << ": " << e.what() << "\n";
      return cqsim::cli::kExitConfigError;
    }
    if (!config.is_object()) {
      std::cerr << "config error: config must be a JSON object\n";
      return cqsim::cli::kExitConfigError;
    }
  }
  config["command"] = command;
  for (const auto& [k, v] : overrides.items()) config[k] = v;
  return cqsim::cli::run(config, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"charge dipole / charge quadrupole qubit simulator"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cqsim ") + cqsim::cli::kVersion);

  // run: execute a full config document (its "command" key selects the mode).
  std::string run_config_path;
  CLI::App* cmd_run = app.add_subcommand("run", "execute a JSON config file");
  cmd_run->add_option("config", run_config_path, "path to the config JSON")->required();

  struct Sub {
    CLI::App* cmd = nullptr;
    std::string config_path;
    std::string output_path;
  };
  const char* kNames[6] = {"spectrum", "gate", "sweep", "t1rho", "geometry", "calibrate"};
  const char* kDescriptions[6] = {
      "eigenvalues versus detuning (CSV)",
      "noise-averaged process fidelity of one gate (JSON)",
      "bare/composite infidelity versus noise strength (CSV)",
      "rotating-frame decay rate (JSON)",
      "fluctuator-induced detunings (CSV)",
      "fit gate parameters to a target rotation (JSON)"};
  Sub subs[6];
  for (int i = 0; i < 6; ++i) {
    subs[i].cmd = app.add_subcommand(kNames[i], kDescriptions[i]);
    subs[i].cmd->add_option("--config", subs[i].config_path, "parameter block JSON")->required();
    subs[i].cmd->add_option("--out", subs[i].output_path, "output path override");
  }

  // twoqubit takes its few parameters directly as flags.
  double t2 = 0.0, coupling_j = 0.0, far_detuning = 0.0;
  std::string twoqubit_out, twoqubit_config;
  CLI::App* cmd_twoqubit =
      app.add_subcommand("twoqubit", "pulsed conditional-NOT protocol (CSV)");
  cmd_twoqubit->add_option("--t2", t2, "target-qubit coupling t2 in GHz");
  cmd_twoqubit->add_option("--j", coupling_j, "sigma_z sigma_z coupling J in GHz");
  cmd_twoqubit->add_option("--far-detuning", far_detuning, "idle detuning in GHz (negative)");
  cmd_twoqubit->add_option("--out", twoqubit_out, "output path");
  cmd_twoqubit->add_option("--config", twoqubit_config, "parameter block JSON");

  CLI11_PARSE(app, argc, argv);

  if (cmd_run->parsed()) return cqsim::cli::run_file(run_config_path, std::cerr);

  for (const Sub& sub : subs) {
    if (!sub.cmd->parsed()) continue;
    json overrides = json::object();
    if (!sub.output_path.empty()) overrides["output_path"] = sub.output_path;
    return run_with_config(sub.cmd->get_name(), sub.config_path, overrides);
  }

  if (cmd_twoqubit->parsed()) {
    json overrides = json::object();
    if (cmd_twoqubit->count("--t2") > 0) overrides["t2_ghz"] = t2;
    if (cmd_twoqubit->count("--j") > 0) overrides["j_ghz"] = coupling_j;
    if (cmd_twoqubit->count("--far-detuning") > 0) overrides["far_detuning_ghz"] = far_detuning;
    if (!twoqubit_out.empty()) overrides["output_path"] = twoqubit_out;
    return run_with_config("twoqubit", twoqubit_config, overrides);
  }

  return cqsim::cli::kExitConfigError;
}
