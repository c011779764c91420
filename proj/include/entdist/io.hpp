// Copyright 2026 The entdist Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON files for states and density matrices.
 *
 * State:   {"schema_version": 1, "qubits": M, "amplitudes": [[re, im], ...]}
 * Density: {"schema_version": 1, "rho": [[[re, im], ...], ...]}, or the bare
 *          nested matrix.
 *
 * Inputs off by at most 1e-6 in norm (trace) or Hermiticity are repaired;
 * anything further is rejected.
 */

#pragma once

#include <string>

#include "entdist/qstate.hpp"

namespace entdist::io {

inline constexpr int kSchemaVersion = 1;

/// `source` names the input in diagnostics.
[[nodiscard]] PureState parse_state(const std::string &text, const std::string &source);
[[nodiscard]] PureState load_state(const std::string &path);
[[nodiscard]] std::string state_to_json(const PureState &state);

[[nodiscard]] DensityMatrix parse_density(const std::string &text, const std::string &source);
[[nodiscard]] DensityMatrix load_density(const std::string &path);
[[nodiscard]] std::string density_to_json(const DensityMatrix &rho);

[[nodiscard]] std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &text);

/// 17 significant digits.
[[nodiscard]] std::string format_double(double x);

} // namespace entdist::io
