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

#include "ffres/cyclotomic.hpp"
#include "ffres/field.hpp"

namespace ffres {

/// ||E~||_{L^k(S_r, d sigma)} <~ q^alpha ||E||_{L^ell(dm)}
struct RestrictionEstimate {
  int k = 0;
  Rational ell;
  Rational alpha;
  std::string source;
};

/// Interpolates ||E~||_{L^{inf,inf}} <= |E| against the weak L^{r0,inf}
/// bound |E|^{3/4}, r0 = (12d-8)/(3d+4), at L^3. Needs d in {4, 6}.
RestrictionEstimate lemma61_estimate(int d);
/// Same pair at L^4, even d >= 4.
RestrictionEstimate lemma62_estimate(int d);
/// Interpolates ||E~||_{L^{2,inf}} <~ q^{-(d-1)/4}|E| against the weak
/// r0 bound at L^3, even d >= 8.
RestrictionEstimate lemma63_estimate(int d);

/// k((d+1)/2 - 1/(6d+2))
Rational gamma_main(int d, int k);
/// 3((d+1)/2 - 1/(9d-18))
Rational gamma_third(int d);

/// e = gamma((k+1)/k - 1/ell) - (k alpha + d - 1). The lower bound
/// min{q, P^{(k+1)/k - 1/ell} / q^{k alpha + d - 1}} reaches q at P = q^gamma
/// iff e >= 1.
Rational exponent_audit(int d, int k, const RestrictionEstimate& est, const Rational& gamma);

struct DeskDelta2 {
  Element q = 0;
  int d = 0;
  std::uint64_t size1 = 0;
  std::uint64_t size2 = 0;
  std::size_t delta = 0;
};

struct ShparlinskiReport {
  int d = 0;
  Rational exponent;  // gamma_third(d) - (d-1)/2
  Rational excess;    // exponent - (d+1)
  bool matches_closed_form = false;  // excess == (3d-7)/(3d-6)
  bool exceeds = false;
  std::optional<DeskDelta2> desk;
};

/// If |E_3| < q^{(d-1)/2} then |E_1||E_2| > q^{d+1}: checks the exponent
/// arithmetic for even d >= 8.
ShparlinskiReport shparlinski_branch_check(int d);

/// |Delta_2(E_1, E_2)| for random sets of the given sizes.
DeskDelta2 desk_delta2(Element q, int d, std::uint64_t size1, std::uint64_t size2, std::uint64_t seed);

}  // namespace ffres
