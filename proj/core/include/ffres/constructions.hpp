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
#include <vector>

#include "ffres/point_set.hpp"

namespace ffres {

/// k copies of F_p^d inside F_{p^2}^d.
std::vector<PointSet> subfield_sets(int p, int d, int k);

/// {(t, i t) : t in F_q} with i the smallest square root of -1.
PointSet isotropic_line(const Field& field);

/// Uniform subset of F_q^d of the given size, deterministic in the seed.
PointSet random_set(const VectorSpace& space, std::uint64_t size, std::uint64_t seed);

}  // namespace ffres
