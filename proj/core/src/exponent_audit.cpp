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

#include "ffres/exponent_audit.hpp"

#include <string>
#include <vector>

#include "ffres/constructions.hpp"
#include "ffres/error.hpp"
#include "ffres/interpolation.hpp"
#include "ffres/resultant.hpp"

namespace ffres {

namespace {

Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

void require_even(int d, int min) {
  if (d % 2 != 0 || d < min) {
    fail(Errc::bad_params, "need even d >= " + std::to_string(min) + ", got " + std::to_string(d));
  }
}

Exponent weak_r0(int d) { return Exponent(12L * d - 8, 3L * d + 4); }

}  // namespace

RestrictionEstimate lemma61_estimate(int d) {
  require_even(d, 4);
  if (d > 6) fail(Errc::bad_params, "L^3 lies above the weak exponent only for d = 4, 6");
  const auto w = interpolation_weights(weak_r0(d), Exponent::infinity(), Exponent(3));
  RestrictionEstimate e{3, 0, 0, "trivial L^inf bound with the weak r0 bound at L^3"};
  Rational inv = rat(3, 4) * w.a0 + w.a1;
  e.ell = 1 / inv;
  e.ell.canonicalize();
  return e;
}

RestrictionEstimate lemma62_estimate(int d) {
  require_even(d, 4);
  const auto w = interpolation_weights(weak_r0(d), Exponent::infinity(), Exponent(4));
  RestrictionEstimate e{4, 0, 0, "trivial L^inf bound with the weak r0 bound at L^4"};
  Rational inv = rat(3, 4) * w.a0 + w.a1;
  e.ell = 1 / inv;
  e.ell.canonicalize();
  return e;
}

RestrictionEstimate lemma63_estimate(int d) {
  require_even(d, 8);
  const auto w = interpolation_weights(Exponent(2), weak_r0(d), Exponent(3));
  RestrictionEstimate e{3, 0, 0, "L^2 sphere bound with the weak r0 bound at L^3"};
  e.alpha = -rat(d - 1, 4) * w.a0;
  e.alpha.canonicalize();
  Rational inv = w.a0 + rat(3, 4) * w.a1;
  e.ell = 1 / inv;
  e.ell.canonicalize();
  return e;
}

Rational gamma_main(int d, int k) {
  Rational g = k * (rat(d + 1, 2) - rat(1, 6L * d + 2));
  g.canonicalize();
  return g;
}

Rational gamma_third(int d) {
  if (d < 3) fail(Errc::bad_params, "need d >= 3");
  Rational g = 3 * (rat(d + 1, 2) - rat(1, 9L * d - 18));
  g.canonicalize();
  return g;
}

Rational exponent_audit(int d, int k, const RestrictionEstimate& est, const Rational& gamma) {
  if (d < 1 || k < 2) fail(Errc::bad_params, "need d >= 1 and k >= 2");
  if (est.k != k) {
    fail(Errc::bad_params, "estimate is for L^" + std::to_string(est.k) + ", audit needs L^" + std::to_string(k));
  }
  if (est.ell < 1) fail(Errc::bad_params, "dual exponent ell must be >= 1");
  Rational e = gamma * (rat(k + 1, k) - 1 / est.ell) - (k * est.alpha + (d - 1));
  e.canonicalize();
  return e;
}

ShparlinskiReport shparlinski_branch_check(int d) {
  require_even(d, 8);
  ShparlinskiReport r;
  r.d = d;
  r.exponent = gamma_third(d) - rat(d - 1, 2);
  r.exponent.canonicalize();
  r.excess = r.exponent - (d + 1);
  r.excess.canonicalize();
  r.matches_closed_form = r.excess == rat(3L * d - 7, 3L * d - 6);
  r.exceeds = sgn(r.excess) > 0;
  return r;
}

DeskDelta2 desk_delta2(Element q, int d, std::uint64_t size1, std::uint64_t size2, std::uint64_t seed) {
  const Field f = Field::make(q);
  const VectorSpace space(f, d);
  const std::vector<PointSet> sets{random_set(space, size1, seed), random_set(space, size2, seed + 1)};
  return {q, d, size1, size2, delta_set(sets).size()};
}

}  // namespace ffres
