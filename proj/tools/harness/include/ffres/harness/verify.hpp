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
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffres/cyclotomic.hpp"
#include "ffres/field.hpp"
#include "ffres/harness/config.hpp"

namespace ffres::harness {

/// Replacement for the closed-form S_t^(m); lets tests inject a corrupted
/// formula.
using ClosedFormHook = std::function<CycNum(const VectorSpace& space, Element t, Index m)>;

struct VerifyHooks {
  ClosedFormHook sphere_closed_form;
};

struct SuiteResult {
  std::string name;
  bool asserted = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::vector<nlohmann::json> failure_rows;  // first few failures
  std::vector<nlohmann::json> records;       // measured values
  bool ok() const { return !asserted || failures == 0; }
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
  nlohmann::json to_json() const;
};

const std::vector<std::string>& verify_suite_names();

SuiteResult run_verify_suite(const std::string& name, const ExperimentConfig& cfg, const VerifyHooks& hooks = {});
VerifyReport run_verify(const ExperimentConfig& cfg, const VerifyHooks& hooks = {});

/// One row per (q, d, t): |S_t|, closed-form status, max_{n != 0}|S_t^(n)|
/// and its ratio to q^{-(d+1)/2}.
struct SphereRow {
  std::uint64_t q = 0;
  int d = 0;
  Element t = 0;
  std::size_t size = 0;
  std::string closed_form;  // match | mismatch | n/a
  double max_hat = 0;
  double ratio = 0;
};

std::vector<SphereRow> sphere_rows(const ExperimentConfig& cfg, const VerifyHooks& hooks = {});
std::string sphere_csv(const std::vector<SphereRow>& rows);

inline constexpr double kDecayThreshold = 3.0;

}  // namespace ffres::harness
