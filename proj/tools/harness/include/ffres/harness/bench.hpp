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

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "ffres/harness/config.hpp"

namespace ffres::harness {

struct BenchRow {
  std::string what;  // transform | nu
  std::uint64_t q = 0;
  int d = 0;
  std::string detail;
  bool agree = false;
  double slow_seconds = 0;  // naive transform, or nu_brute
  double fast_seconds = 0;  // axis transform, or nu_fourier
  double speedup = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool ok() const;
  nlohmann::json to_json() const;
};

/// Times naive vs axis transforms and nu_brute vs nu_fourier on the config
/// grid. Outputs must agree before a timing counts. Float mode only;
/// exact mode throws ExactModeUnsupported.
BenchReport run_bench(const ExperimentConfig& cfg);

/// Median wall time of `reps` runs of naive and axis transforms at (q, d).
BenchRow bench_transform(const FieldSpec& f, int d, int reps, std::uint64_t seed);

}  // namespace ffres::harness
