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
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffres/field.hpp"
#include "ffres/grid.hpp"
#include "ffres/resultant.hpp"

namespace ffres::harness {

struct FieldSpec {
  int p = 3;
  int n = 1;
  std::uint64_t q() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

struct ExperimentConfig {
  std::string suite;
  std::optional<std::vector<FieldSpec>> fields;  // unset: suite default
  std::optional<std::vector<int>> dims;
  std::optional<std::vector<int>> ks;
  std::vector<std::uint64_t> sizes;  // probe sweep; empty: automatic
  int reps = 5;
  std::string source = "random";  // random | file | subfield | isotropic | full
  std::vector<std::string> set_files;
  std::string convention = "sum";  // sum | difference: last set enters with a minus sign
  std::vector<std::string> suites;  // verify subset; empty: all
  std::uint64_t seed = 1;
  Mode mode = Mode::exact;
  std::string out;
  int threads = 1;
  Element radius = 1;
  std::uint64_t field_cap = kDefaultFieldCap;
  std::uint64_t grid_cap = kDefaultGridCap;
  std::uint64_t brute_cap = kDefaultBruteCap;

  /// ConfigInvalid on out-of-range or unknown values.
  void validate() const;
};

void to_json(nlohmann::json& j, const FieldSpec& f);
void from_json(const nlohmann::json& j, FieldSpec& f);
void to_json(nlohmann::json& j, const ExperimentConfig& c);
/// Unknown keys are rejected.
void from_json(const nlohmann::json& j, ExperimentConfig& c);

ExperimentConfig load_config(const std::string& path);

/// Splits q = p^n; ConfigInvalid unless q is an odd prime power.
FieldSpec field_from_q(std::uint64_t q);

/// Negates the last set under the difference convention.
std::vector<PointSet> with_convention(std::vector<PointSet> sets, const ExperimentConfig& cfg);

std::string mode_name(Mode m);
Mode parse_mode(const std::string& s);

}  // namespace ffres::harness
