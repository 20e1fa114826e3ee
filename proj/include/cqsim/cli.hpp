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

#include <cstdint>
#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace cqsim::cli {

inline constexpr const char* kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 1;
inline constexpr int kExitNotConverged = 2;

/// FNV-1a over the canonical (key-sorted) serialization of the config.
std::uint64_t config_hash(const nlohmann::json& config);

/// Executes one run described by a single JSON config document with a
/// "command" key in {spectrum, gate, sweep, t1rho, geometry, calibrate,
/// twoqubit}.  The config is validated in full before any computation and
/// output files are written only after the computation finishes.  Identical
/// configs produce byte-identical artifacts.  Returns an exit code;
/// diagnostics go to err.
int run(const nlohmann::json& config, std::ostream& err);

/// Loads the JSON document at path and runs it.
int run_file(const std::string& path, std::ostream& err);

/// Worker-thread count for sweep parallelism: CQSIM_THREADS when set to a
/// positive integer, otherwise 1.
int thread_count();

}  // namespace cqsim::cli
