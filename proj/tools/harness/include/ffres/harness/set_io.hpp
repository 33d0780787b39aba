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

#include <string>

#include "ffres/point_set.hpp"

namespace ffres::harness {

/// {"p":3,"n":2,"d":2,"elements":[[e00,e01],[e10,e11],...]}
PointSet read_set_file(const std::string& path, std::uint64_t cap = kDefaultGridCap);
void write_set_file(const std::string& path, const PointSet& set);

}  // namespace ffres::harness
