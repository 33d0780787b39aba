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

#include "ffres/cyclotomic.hpp"
#include "ffres/measure.hpp"

namespace ffres {

/// 1/r = (1 - theta)/r0 + theta/r1. The bound scales as A0^{a0} A1^{a1}
/// with a0 = 1 - theta and a1 = theta.
struct InterpolationWeights {
  Rational theta;
  Rational a0;
  Rational a1;
};

/// Needs 1 <= r0 < r < r1 <= inf.
InterpolationWeights interpolation_weights(const Exponent& r0, const Exponent& r1, const Exponent& r);

/// max{2r/(r-r0), 2r/(r1-r)}^{1/r}, or (r/(r-r0))^{1/r} when r1 = inf.
double interpolation_constant(const Exponent& r0, const Exponent& r1, const Exponent& r);

/// Strong L^r bound from weak bounds A0 at r0 and A1 at r1. Zero if either
/// bound is zero.
double interpolate_bound(double a0, const Exponent& r0, double a1, const Exponent& r1, const Exponent& r);

}  // namespace ffres
