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

#include <optional>
#include <string>
#include <vector>

#include "ffres/harness/config.hpp"

namespace ffres::harness {

struct RestrictRow {
  std::uint64_t instance = 0;
  std::string check;
  double measured = 0;
  double bound = 0;
  double ratio = 0;          // measured / bound
  std::optional<bool> pass;  // unset for probes
};

struct RestrictReport {
  std::vector<RestrictRow> rows;

  bool ok() const;
  std::string csv() const;
};

const std::vector<std::string>& restrict_suite_names();

/// suite is one of lorentz, rti, weak-probe, lemma54.
RestrictReport run_restrict(const FieldSpec& f, int d, Element t, const std::string& suite, const ExperimentConfig& cfg);

}  // namespace ffres::harness
