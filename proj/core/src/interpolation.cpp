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

#include "ffres/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "ffres/error.hpp"

namespace ffres {

namespace {

void check_triple(const Exponent& r0, const Exponent& r1, const Exponent& r) {
  if (r0 < Exponent(1) || !(r0 < r) || !(r < r1)) {
    fail(Errc::bad_exponents, "need 1 <= r0 < r < r1 <= inf, got r0=" + r0.str() + " r=" + r.str() + " r1=" + r1.str());
  }
}

}  // namespace

InterpolationWeights interpolation_weights(const Exponent& r0, const Exponent& r1, const Exponent& r) {
  check_triple(r0, r1, r);
  InterpolationWeights w;
  w.theta = (r0.reciprocal() - r.reciprocal()) / (r0.reciprocal() - r1.reciprocal());
  w.theta.canonicalize();
  w.a1 = w.theta;
  w.a0 = 1 - w.theta;
  return w;
}

double interpolation_constant(const Exponent& r0, const Exponent& r1, const Exponent& r) {
  check_triple(r0, r1, r);
  const Rational& rr = r.value();
  const double inv = 1.0 / rr.get_d();
  if (r1.is_infinite()) return std::pow(Rational(rr / (rr - r0.value())).get_d(), inv);
  const Rational c0 = 2 * rr / (rr - r0.value());
  const Rational c1 = 2 * rr / (r1.value() - rr);
  return std::pow(std::max(c0, c1).get_d(), inv);
}

double interpolate_bound(double a0, const Exponent& r0, double a1, const Exponent& r1, const Exponent& r) {
  const auto w = interpolation_weights(r0, r1, r);
  if (a0 < 0 || a1 < 0) fail(Errc::bad_params, "weak-type bounds must be nonnegative");
  if (a0 == 0 || a1 == 0) return 0.0;
  return interpolation_constant(r0, r1, r) * std::pow(a0, w.a0.get_d()) * std::pow(a1, w.a1.get_d());
}

}  // namespace ffres
