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
#include <span>
#include <string>
#include <vector>

#include "ffres/cyclotomic.hpp"
#include "ffres/point_set.hpp"
#include "ffres/resultant.hpp"

namespace ffres {

/// Exact Fourier-side data of a tuple E_1..E_k.
struct Spectrum {
  VectorSpace space;
  int k = 0;
  Integer product;      // P = prod |E_j|
  NuProfile nu;
  Integer zero_sums;    // N_0 = #{tuples with x^1 + .. + x^k = 0}
  std::vector<CycNum> w;  // q^{dk} sum_{v in S_r} prod_j E_j^(v), r in F_q
};

Spectrum spectrum(std::span<const PointSet> sets, std::uint64_t cap = kDefaultBruteCap);

enum class Relation { le, ge };

struct Subcheck {
  std::string name;
  bool pass = false;
};

struct ClaimReport {
  int claim = 0;
  bool hypothesis = false;
  Relation relation = Relation::le;
  bool exact = true;  // lhs and rhs are rational
  Rational lhs;
  Rational rhs;
  double lhs_approx = 0;
  double rhs_approx = 0;
  bool pass = false;
  std::vector<Subcheck> subchecks;

  bool violated() const { return hypothesis && !pass; }
};

/// (P - nu(0))^2 >= P^2 / 9 under P >= 3^k q^{dk/2}, d even.
ClaimReport claim1_check(const Spectrum& s);
/// sum_t nu(t)^2 <= P^2 / q + q^{2dk-d} sum_r |sum_{v in S_r} prod_j E_j^(v)|^2.
ClaimReport claim2_check(const Spectrum& s);
/// q^{2dk-d} |sum_{m in S_0} prod_j E_j^(m)|^2 - nu(0)^2 <= 4 P^2 / q under
/// P >= q^{dk/2}, d even.
ClaimReport claim3_check(const Spectrum& s);

ClaimReport claim1_check(std::span<const PointSet> sets);
ClaimReport claim2_check(std::span<const PointSet> sets);
ClaimReport claim3_check(std::span<const PointSet> sets);

/// x <= c q^{d/2} P^{(k-1)/k}, decided exactly.
bool leq_root_term(const Rational& x, const Rational& c, const Integer& q, int d, int k, const Integer& product);

struct Theorem31Report {
  std::size_t delta_size = 0;
  Integer numerator;    // (P - nu(0))^2
  Integer denominator;  // sum_{t != 0} nu(t)^2
  bool cauchy_schwarz = false;  // |Delta| * denominator >= numerator
  bool hypothesis = false;      // d even and P >= 3^k q^{dk/2}
  double sphere_moment = 0;     // max_{r != 0} prod_j (sum_{v in S_r} |E_j^(v)|^k)^{1/k}
  double bound = 0;             // min{q, P^{(k+1)/k} / (q^{dk} sphere_moment)}
  double ratio = 0;             // delta_size / bound
};

Theorem31Report theorem31_chain(std::span<const PointSet> sets, std::uint64_t cap = kDefaultBruteCap);

}  // namespace ffres
