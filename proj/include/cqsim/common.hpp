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

#include <complex>
#include <stdexcept>
#include <string>

namespace cqsim {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Unit convention used throughout: energies are stored as ordinary
// frequencies E/h in GHz, durations in ns, and a constant Hamiltonian H
// evolves a state over tau as U = exp(-i 2*pi H tau).  For comparison with
// values quoted in ueV: 1 ueV = 0.2417989 GHz.  The constant is provided for
// documentation and I/O only; nothing internal converts through it.
inline constexpr double kGhzPerMicroEv = 0.2417989;

namespace detail {

[[noreturn]] inline void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

inline void require(bool condition, const std::string& what) {
  if (!condition) fail(what);
}

}  // namespace detail
}  // namespace cqsim
