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

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "entdist/families.hpp"

namespace entdist::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitViolation = 2;

/// Entry point of the `entdist` tool. Reports go to `out` unless --output
/// names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// "kind:M:p1,p2,..." with angles given as numbers or pi expressions.
[[nodiscard]] FamilySpec parse_family_spec(const std::string &text);

/// A number, or a product/quotient with `pi`: "pi/4", "2*pi/3", "0.5pi".
[[nodiscard]] double parse_angle(const std::string &text);

} // namespace entdist::cli
