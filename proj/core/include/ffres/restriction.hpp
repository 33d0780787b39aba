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

#include "ffres/grid.hpp"
#include "ffres/measure.hpp"
#include "ffres/sphere.hpp"

namespace ffres {

/// (f d sigma)^v(m) = |S_t|^{-1} sum_{x in S_t} f(x) chi(m . x), with f listed
/// in table.points(t) order.
DualFn extension(const SphereTable& table, Element t, std::span<const Complex> f);
ExactDualFn extension_exact(const SphereTable& table, Element t, std::span<const std::int64_t> f);

/// g~ on S_t, in table.points(t) order.
std::vector<Complex> tilde_on_sphere(const SphereTable& table, Element t, const DualFn& g);

/// ||(f d sigma)^v||_{L^r(dm)} / ||f||_{L^p(S_t, d sigma)}
double extension_ratio(const SphereTable& table, Element t, std::span<const Complex> f, const Exponent& p,
                       const Exponent& r);

/// ||g~||_{L^{p'}(S_t, d sigma)} / ||g||_{L^{r'}(dm)}
double duality_gap(const SphereTable& table, Element t, const DualFn& g, const Exponent& p, const Exponent& r);

/// Pairs (p, r) whose extremizers lie in the candidate families below:
/// p = 1, r = inf, or p = r = 2.
bool duality_extremizers_known(const Exponent& p, const Exponent& r);

struct DualitySweep {
  double extension_sup = 0;
  double restriction_sup = 0;
  bool agree(double tol = 1e-6) const;
};

/// Sup of both ratios over seeded families: deltas, constants, character
/// waves and random signs.
DualitySweep duality_sweep(const SphereTable& table, Element t, const Exponent& p, const Exponent& r,
                           std::uint64_t seed, int samples = 16);

struct RtiReport {
  double a0 = 0;
  double a1 = 0;
  double strong = 0;
  double bound = 0;
  bool pass = false;
};

/// Measures the weak norms of E~ on S_t at r0 and r1 and checks the strong
/// L^r norm against interpolate_bound.
RtiReport rti_audit(const PointSet& e, const SphereTable& table, Element t, const Exponent& r0, const Exponent& r1,
                    const Exponent& r);

struct Lemma54Report {
  double lhs = 0;  // sum_{x in S_t} |E~(x)|^2
  double rhs = 0;  // |E||S_t| + |E|^2 q^d max_{n != 0} |S_t^(n)|
  bool pass = false;
  bool large = false;  // |E| >= q^{(d-1)/2}
  double ratio = 0;    // lhs / (q^{(d-1)/2} |E|^2)
};

Lemma54Report lemma54_check(const PointSet& e, const SphereTable& table, Element t, const MaxHat& decay);
Lemma54Report lemma54_check(const PointSet& e, const SphereTable& table, Element t);

struct WeakProbeReport {
  Exponent r0{1};
  double max_ratio = 0;
  std::string argmax_family;
  std::vector<std::pair<std::string, double>> family_max;
  std::size_t candidates = 0;
};

/// ||g~||_{L^{r0,inf}(S_t, d sigma)} / ||g||_{L^{4/3}(dm)} with
/// r0 = (12d-8)/(3d+4), maximized over a seeded candidate family. A lower
/// bound for the operator norm.
WeakProbeReport weak_type_probe(const SphereTable& table, Element t, std::uint64_t seed);

struct SimpleFnReport {
  double lhs = 0;       // ||(f d sigma)^v||_{L^r(dm)}
  double triangle = 0;  // sum_j a_j ||(F_j d sigma)^v||_{L^r(dm)}
  double lorentz = 0;   // ||f||_{L^{p,1}}
  double layers = 0;    // p sum_j a_j ||F_j||_{L^p(d sigma)}
  bool triangle_holds = false;
  bool layers_match = false;
};

/// f = sum_j a_j 1_{F_j} with F_1 > F_2 > .. nested random subsets of S_t of
/// the given sizes.
SimpleFnReport simple_function_check(const SphereTable& table, Element t, std::span<const double> coeffs,
                                     std::span<const std::size_t> sizes, const Exponent& p, const Exponent& r,
                                     std::uint64_t seed);

}  // namespace ffres
