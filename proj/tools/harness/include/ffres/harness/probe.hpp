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

#include <optional>
#include <string>
#include <vector>

#include "ffres/harness/config.hpp"

namespace ffres::harness {

struct ProbeRow {
  std::uint64_t instance = 0;
  std::string kind;  // random | file | subfield | isotropic | full | threshold
  std::uint64_t q = 0;
  int d = 0;
  int k = 0;
  std::vector<std::uint64_t> sizes;
  std::string product;
  std::size_t delta = 0;
  std::uint64_t nu0 = 0;
  std::optional<double> bound;  // lower-bound expression; set only when its size hypothesis holds
  double ratio = 0;             // delta / q
  std::optional<bool> pass;     // asserted rows only
};

struct ProbeReport {
  std::vector<ProbeRow> rows;

  bool ok() const;
  std::string csv() const;
  nlohmann::json to_json() const;
};

/// Threshold rows carry the smallest sampled product whose median |Delta|
/// reaches 0.9 q; delta and nu0 are medians at that size.
ProbeReport run_probe(const ExperimentConfig& cfg);

}  // namespace ffres::harness
