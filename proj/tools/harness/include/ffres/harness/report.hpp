// Copyright 2026 The ffres Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffres/harness/config.hpp"

namespace ffres::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 2;
inline constexpr int kExitConfig = 3;

/// {"version", "config", "timestamp", ...body}. The timestamp is the only
/// nondeterministic field.
nlohmann::json envelope(const ExperimentConfig& cfg, nlohmann::json body);

/// Copy without the timestamp, for reproducibility comparisons.
nlohmann::json strip_timestamp(nlohmann::json j);

std::string utc_timestamp();

/// Writes to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& text);

std::string csv_escape(const std::string& s);
std::string fmt_double(double v);

}  // namespace ffres::harness
