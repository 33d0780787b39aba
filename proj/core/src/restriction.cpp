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

#include "ffres/restriction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ffres/error.hpp"
#include "ffres/interpolation.hpp"
#include "ffres/lorentz.hpp"
#include "ffres/random.hpp"
#include "ffres/transform.hpp"

namespace ffres {

namespace {

void require_radius(Element t) {
  if (t == 0) fail(Errc::zero_radius, "sphere radius must be nonzero");
}

void require_values(const SphereTable& table, Element t, std::size_t n) {
  if (n != table.size(t)) {
    fail(Errc::dimension_mismatch,
         "expected " + std::to_string(table.size(t)) + " sphere values, got " + std::to_string(n));
  }
}

Complex root(int k, int p) {
  const double a = 2.0 * std::numbers::pi * k / p;
  return {std::cos(a), std::sin(a)};
}


}  // namespace

DualFn extension(const SphereTable& table, Element t, std::span<const Complex> f) {
  require_radius(t);
  require_values(table, t, f.size());
  const VectorSpace& space = table.space();
  std::vector<Complex> in(space.size(), 0.0), out(space.size());
  const auto pts = table.points(t);
  for (std::size_t i = 0; i < pts.size(); ++i) in[pts[i]] = f[i];
  character_transform(space, in, out, +1);
  const double w = 1.0 / static_cast<double>(pts.size());
  for (auto& v : out) v *= w;
  return DualFn(space, std::move(out));
}

ExactDualFn extension_exact(const SphereTable& table, Element t, std::span<const std::int64_t> f) {
  require_radius(t);
  require_values(table, t, f.size());
  const VectorSpace& space = table.space();
  const int p = space.field().p();
  const auto pts = table.points(t);
  const Rational w(1, static_cast<unsigned long>(pts.size()));
  std::vector<CycNum> out;
  out.reserve(space.size());
  for (Index m = 0; m < space.size(); ++m) {
    ZetaVec z(p);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (f[i] != 0) z.add_zeta(space.dot_trace(pts[i], m), f[i]);
    }
    out.push_back(z.to_cycnum() * w);
  }
  return ExactDualFn(space, std::move(out));
}

std::vector<Complex> tilde_on_sphere(const SphereTable& table, Element t, const DualFn& g) {
  const auto gt = tilde(g);
  std::vector<Complex> out;
  out.reserve(table.size(t));
  for (auto x : table.points(t)) out.push_back(gt.at(x));
  return out;
}

double extension_ratio(const SphereTable& table, Element t, std::span<const Complex> f, const Exponent& p,
                       const Exponent& r) {
  const double den = norm(f, MeasureSpace::sphere(table.size(t)), p);
  if (den == 0) fail(Errc::bad_params, "extension ratio of the zero function");
  const auto ext = extension(table, t, f);
  return norm(ext.numerators(), MeasureSpace::dual_counting(), r) / den;
}

double duality_gap(const SphereTable& table, Element t, const DualFn& g, const Exponent& p, const Exponent& r) {
  require_radius(t);
  const double den = norm(g.numerators(), MeasureSpace::dual_counting(), r.conjugate());
  if (den == 0) fail(Errc::bad_params, "duality ratio of the zero function");
  const auto gt = tilde_on_sphere(table, t, g);
  return norm(gt, MeasureSpace::sphere(table.size(t)), p.conjugate()) / den;
}

bool duality_extremizers_known(const Exponent& p, const Exponent& r) {
  return p == Exponent(1) || r.is_infinite() || (p == Exponent(2) && r == Exponent(2));
}

bool DualitySweep::agree(double tol) const {
  return std::abs(extension_sup - restriction_sup) <= tol * std::max(1.0, std::abs(restriction_sup));
}

DualitySweep duality_sweep(const SphereTable& table, Element t, const Exponent& p, const Exponent& r,
                           std::uint64_t seed, int samples) {
  require_radius(t);
  const VectorSpace& space = table.space();
  const int prime = space.field().p();
  const auto pts = table.points(t);
  const std::size_t n = pts.size();
  Rng rng(seed);
  DualitySweep out;

  auto ext = [&](const std::vector<Complex>& f) {
    out.extension_sup = std::max(out.extension_sup, extension_ratio(table, t, f, p, r));
  };
  for (auto i : rng.sample(n, std::min<std::uint64_t>(n, samples))) {
    std::vector<Complex> f(n, 0.0);
    f[i] = 1.0;
    ext(f);
  }
  ext(std::vector<Complex>(n, 1.0));
  for (int s = 0; s < samples; ++s) {
    std::vector<Complex> f(n);
    for (auto& v : f) v = rng.below(2) ? 1.0 : -1.0;
    ext(f);
  }

  auto res = [&](std::vector<Complex> g) {
    out.restriction_sup = std::max(out.restriction_sup, duality_gap(table, t, DualFn(space, std::move(g)), p, r));
  };
  for (auto m : rng.sample(space.size(), std::min<std::uint64_t>(space.size(), samples))) {
    std::vector<Complex> g(space.size(), 0.0);
    g[m] = 1.0;
    res(std::move(g));
  }
  for (auto i : rng.sample(n, std::min<std::uint64_t>(n, samples))) {
    std::vector<Complex> g(space.size());
    for (Index m = 0; m < space.size(); ++m) g[m] = root(space.dot_trace(pts[i], m), prime);
    res(std::move(g));
  }
  res(std::vector<Complex>(space.size(), 1.0));
  for (int s = 0; s < samples; ++s) {
    std::vector<Complex> g(space.size());
    for (auto& v : g) v = rng.below(2) ? 1.0 : -1.0;
    res(std::move(g));
  }
  return out;
}

RtiReport rti_audit(const PointSet& e, const SphereTable& table, Element t, const Exponent& r0, const Exponent& r1,
                    const Exponent& r) {
  require_radius(t);
  const auto vals = tilde_on_sphere(table, t, DualFn::indicator(e));
  const Rearrangement f(vals);
  RtiReport out;
  out.a0 = weak_norm(f, r0);
  out.a1 = weak_norm(f, r1);
  out.strong = norm(vals, MeasureSpace::sphere(table.size(t)), r);
  out.bound = interpolate_bound(out.a0, r0, out.a1, r1, r);
  out.pass = out.strong <= out.bound * (1 + 1e-9) + 1e-9;
  return out;
}

Lemma54Report lemma54_check(const PointSet& e, const SphereTable& table, Element t, const MaxHat& decay) {
  require_radius(t);
  const VectorSpace& space = table.space();
  const auto vals = tilde_on_sphere(table, t, DualFn::indicator(e));
  Lemma54Report out;
  for (const auto& v : vals) out.lhs += std::norm(v);
  const double size = static_cast<double>(e.size());
  const double n = static_cast<double>(space.size());
  out.rhs = size * static_cast<double>(table.size(t)) + size * size * n * decay.max;
  out.pass = out.lhs <= out.rhs * (1 + 1e-9) + 1e-9;
  // |E|^2 >= q^{d-1}
  const Integer q(static_cast<unsigned long>(space.field().q()));
  Integer qd1;
  mpz_pow_ui(qd1.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(space.dim() - 1));
  out.large = Integer(static_cast<unsigned long>(e.size())) * Integer(static_cast<unsigned long>(e.size())) >= qd1;
  const double scale = std::pow(static_cast<double>(space.field().q()), (space.dim() - 1) / 2.0) * size * size;
  out.ratio = scale > 0 ? out.lhs / scale : 0.0;
  return out;
}

Lemma54Report lemma54_check(const PointSet& e, const SphereTable& table, Element t) {
  return lemma54_check(e, table, t, max_nonzero_hat(table, t));
}

WeakProbeReport weak_type_probe(const SphereTable& table, Element t, std::uint64_t seed) {
  require_radius(t);
  const VectorSpace& space = table.space();
  const int d = space.dim();
  if (d % 2 != 0) fail(Errc::odd_dimension, "weak-type probe needs even d");
  if (d < 4) fail(Errc::too_small_dimension, "weak-type probe needs d >= 4");
  WeakProbeReport out;
  out.r0 = Exponent(12L * d - 8, 3L * d + 4);
  const Exponent four_thirds(4, 3);
  const std::size_t n = space.size();
  Rng rng(seed);

  auto eval = [&](const std::string& family, std::vector<Complex> g) {
    const double den = norm(g, MeasureSpace::dual_counting(), four_thirds);
    if (den == 0) return;
    const auto gt = tilde_on_sphere(table, t, DualFn(space, std::move(g)));
    const double ratio = weak_norm(Rearrangement(gt), out.r0) / den;
    ++out.candidates;
    auto it = std::find_if(out.family_max.begin(), out.family_max.end(),
                           [&](const auto& fm) { return fm.first == family; });
    if (it == out.family_max.end()) {
      out.family_max.emplace_back(family, ratio);
    } else {
      it->second = std::max(it->second, ratio);
    }
    if (ratio > out.max_ratio) {
      out.max_ratio = ratio;
      out.argmax_family = family;
    }
  };
  auto indicator = [&](std::span<const std::uint64_t> idx) {
    std::vector<Complex> g(n, 0.0);
    for (auto i : idx) g[i] = 1.0;
    return g;
  };

  std::vector<std::uint64_t> single{0};
  eval("singleton", indicator(single));
  for (auto m : rng.sample(n, std::min<std::uint64_t>(n, 16))) {
    single[0] = m;
    eval("singleton", indicator(single));
  }
  for (int i = 1; i <= 6; ++i) {
    const std::uint64_t size = std::max<std::uint64_t>(1, n >> i);
    for (int rep = 0; rep < 2; ++rep) eval("density_2^-" + std::to_string(i), indicator(rng.sample(n, size)));
  }
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<Complex> g(n);
    for (auto& v : g) v = rng.below(2) ? 1.0 : -1.0;
    eval("random_sign", std::move(g));
  }
  eval("full", std::vector<Complex>(n, 1.0));
  for (Element r = 0; r < space.field().q(); ++r) {
    const auto pts = table.points(r);
    if (pts.empty()) continue;
    std::vector<std::uint64_t> idx(pts.begin(), pts.end());
    eval("sphere_cap", indicator(idx));
    std::vector<std::uint64_t> half;
    for (auto i : rng.sample(idx.size(), std::max<std::uint64_t>(1, idx.size() / 2))) half.push_back(idx[i]);
    eval("sphere_cap", indicator(half));
  }
  return out;
}

SimpleFnReport simple_function_check(const SphereTable& table, Element t, std::span<const double> coeffs,
                                     std::span<const std::size_t> sizes, const Exponent& p, const Exponent& r,
                                     std::uint64_t seed) {
  require_radius(t);
  const std::size_t n = table.size(t);
  if (coeffs.size() != sizes.size() || coeffs.empty()) fail(Errc::bad_params, "one coefficient per layer");
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    if (coeffs[j] <= 0) fail(Errc::bad_params, "layer coefficients must be positive");
    if (sizes[j] == 0 || sizes[j] > n || (j > 0 && sizes[j] > sizes[j - 1])) {
      fail(Errc::bad_params, "layer sizes must be nonincreasing within [1, |S_t|]");
    }
  }
  Rng rng(seed);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  const auto dm = MeasureSpace::dual_counting();
  SimpleFnReport out;
  std::vector<Complex> f(n, 0.0);
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    std::vector<Complex> layer(n, 0.0);
    for (std::size_t i = 0; i < sizes[j]; ++i) {
      layer[order[i]] = 1.0;
      f[order[i]] += coeffs[j];
    }
    out.triangle += coeffs[j] * norm(extension(table, t, layer).numerators(), dm, r);
    out.layers += coeffs[j] * std::pow(static_cast<double>(sizes[j]) / n, p.reciprocal().get_d());
  }
  out.layers *= p.to_double();
  out.lhs = norm(extension(table, t, f).numerators(), dm, r);
  out.lorentz = lorentz_norm(f, p, Exponent(1));
  out.triangle_holds = out.lhs <= out.triangle * (1 + 1e-12) + 1e-12;
  out.layers_match = std::abs(out.lorentz - out.layers) <= 1e-9 * (1 + out.layers);
  return out;
}

}  // namespace ffres
