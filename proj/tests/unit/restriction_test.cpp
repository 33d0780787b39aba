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

#include <gtest/gtest.h>

#include "ffres/constructions.hpp"
#include "ffres/exponent_audit.hpp"
#include "ffres/interpolation.hpp"
#include "ffres/lorentz.hpp"
#include "ffres/measure.hpp"
#include "ffres/random.hpp"
#include "ffres/restriction.hpp"
#include "ffres/sphere.hpp"

using namespace ffres;

namespace {

Rational rq(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

std::vector<Complex> random_values(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> f(n);
  for (auto& z : f) z = {rng.unit() - 0.5, rng.unit() - 0.5};
  return f;
}

}  // namespace

TEST(Exponent, Basics) {
  const Exponent p(4, 3);
  EXPECT_EQ(p.conjugate(), Exponent(4));
  EXPECT_EQ(Exponent(1).conjugate(), Exponent::infinity());
  EXPECT_EQ(Exponent::infinity().conjugate(), Exponent(1));
  EXPECT_EQ(p.reciprocal(), rq(3, 4));
  EXPECT_EQ(Exponent::infinity().reciprocal(), 0);
  EXPECT_TRUE(Exponent(2) < Exponent::infinity());
  EXPECT_EQ(Exponent(8, 6), p);
  EXPECT_EQ(p.str(), "4/3");
  EXPECT_EQ(Exponent::infinity().str(), "inf");
  EXPECT_EQ(code_of([] { Exponent(0); }), Errc::bad_exponents);
}

TEST(Measure, Norms) {
  const VectorSpace v(Field::make(5), 2);
  const auto e = random_set(v, 7, 2);
  std::vector<double> ind(v.size(), 0.0);
  for (auto x : e.indices()) ind[x] = 1.0;
  EXPECT_DOUBLE_EQ(norm(ind, MeasureSpace::dual_counting(), Exponent(1)), 7.0);
  EXPECT_DOUBLE_EQ(norm(ind, MeasureSpace::space_normalized(v), Exponent(1)), 7.0 / 25);
  EXPECT_DOUBLE_EQ(norm(ind, MeasureSpace::dual_counting(), Exponent::infinity()), 1.0);
  for (auto r : {Exponent(1), Exponent(4, 3), Exponent(3), Exponent::infinity()}) {
    EXPECT_NEAR(norm(std::vector<double>(8, 1.0), MeasureSpace::sphere(8), r), 1.0, 1e-12);
  }
  EXPECT_EQ(MeasureSpace::sphere(8).total_mass(8), 1);
  EXPECT_EQ(code_of([] { (void)norm(std::vector<double>(3, 1.0), MeasureSpace::dual_counting(), Exponent(1, 2)); }),
            Errc::bad_exponents);
}

TEST(Lorentz, DistributionAndRearrangement) {
  const std::vector<double> c(10, -2.5);
  const Rearrangement r(c);
  EXPECT_DOUBLE_EQ(r.distribution(2.0), 1.0);
  EXPECT_DOUBLE_EQ(r.distribution(2.5), 0.0);
  EXPECT_DOUBLE_EQ(r(0.0), 2.5);
  EXPECT_DOUBLE_EQ(r(0.99), 2.5);
  std::vector<double> half(10, 0.0);
  for (int i = 0; i < 5; ++i) half[static_cast<std::size_t>(i)] = 1.0;
  const Rearrangement h(half);
  EXPECT_DOUBLE_EQ(h(0.25), 1.0);
  EXPECT_DOUBLE_EQ(h(0.49), 1.0);
  EXPECT_DOUBLE_EQ(h(0.75), 0.0);
  std::vector<Complex> z(10, Complex(3, 4));
  EXPECT_DOUBLE_EQ(dist_fn(z, 4.9), 1.0);
}

TEST(Lorentz, Identities) {
  const auto f = random_values(40, 3);
  const Rearrangement re(f);
  const auto mu = MeasureSpace::sphere(40);
  for (auto p : {Exponent(1), Exponent(4, 3), Exponent(2), Exponent(5, 2), Exponent(4)}) {
    const double strong = norm(f, mu, p);
    EXPECT_NEAR(layer_cake_norm(re, p), strong, 1e-9 * strong);
    EXPECT_NEAR(lorentz_norm(re, p, p), strong, 1e-9 * strong);
    EXPECT_LE(weak_norm(re, p), strong * (1 + 1e-12));
  }
  // indicator of a quarter: ||F||_{L^{p,1}} = p |F|^{1/p}
  std::vector<Complex> ind(40, 0.0);
  for (int i = 0; i < 10; ++i) ind[static_cast<std::size_t>(i)] = 1.0;
  EXPECT_NEAR(lorentz_norm(ind, Exponent(2), Exponent(1)), 2 * std::sqrt(0.25), 1e-12);
  EXPECT_NEAR(weak_norm(Rearrangement(ind), Exponent(2)), std::sqrt(0.25), 1e-12);
  EXPECT_EQ(lorentz_norm(ind, Exponent::infinity(), Exponent(2)), INFINITY);
}

TEST(Interpolation, Weights) {
  const auto w = interpolation_weights(Exponent(2), Exponent(4), Exponent(3));
  EXPECT_EQ(w.theta, rq(2, 3));
  EXPECT_EQ(w.a0 + w.a1, 1);
  // (1 - theta)/2 + theta/4 = 1/3
  EXPECT_EQ((1 - w.theta) / 2 + w.theta / 4, rq(1, 3));
  const auto l = interpolation_weights(Exponent(40, 16), Exponent::infinity(), Exponent(3));
  EXPECT_EQ(l.a0, rq(5, 6));
  EXPECT_EQ(code_of([] { interpolation_weights(Exponent(3), Exponent(2), Exponent(4)); }), Errc::bad_exponents);
}

TEST(Interpolation, ScaleInvariance) {
  for (auto [r0, r1, r] : {std::tuple{Exponent(2), Exponent(4), Exponent(3)},
                           {Exponent(2), Exponent::infinity(), Exponent(3)}}) {
    const double c = interpolation_constant(r0, r1, r);
    EXPECT_NEAR(interpolate_bound(2.5, r0, 2.5, r1, r), 2.5 * c, 1e-12);
    EXPECT_GE(c, 1.0);
  }
  EXPECT_NEAR(interpolation_constant(Exponent(2), Exponent::infinity(), Exponent(3)), std::cbrt(3.0), 1e-12);
  EXPECT_NEAR(interpolation_constant(Exponent(2), Exponent(4), Exponent(3)), std::cbrt(6.0), 1e-12);
}

TEST(Extension, Values) {
  const VectorSpace v(Field::make(3), 2);
  const SphereTable tab(v);
  const auto one = extension(tab, 1, std::vector<Complex>(4, 1.0));
  EXPECT_NEAR(std::abs(one.at(0) - Complex(1.0)), 0, 1e-12);
  for (Index m = 1; m < v.size(); ++m) {
    if (v.norm(m) == 1) {
      EXPECT_NEAR(std::abs(one.at(m) - Complex(0.25)), 0, 1e-12);
    }
  }
  const auto ex = extension_exact(tab, 1, std::vector<std::int64_t>(4, 1));
  for (Index m = 0; m < v.size(); ++m) EXPECT_EQ(ex.at(m), sphere_hat_direct(tab, 1, m) * Rational(9, 4));
  // delta at the first sphere point: |(f d sigma)^v| = 1/|S_t| everywhere
  std::vector<Complex> d(4, 0.0);
  d[0] = 1.0;
  const auto w = extension(tab, 1, d);
  for (Index m = 0; m < v.size(); ++m) EXPECT_NEAR(std::abs(w.at(m)), 0.25, 1e-12);
  EXPECT_EQ(code_of([&] { (void)extension(tab, 0, std::vector<Complex>(1, 1.0)); }), Errc::zero_radius);
}

TEST(Duality, KnownPairsAgree) {
  const SphereTable tab(VectorSpace(Field::make(5), 2));
  for (auto [p, r] : {std::pair{Exponent(1), Exponent(2)}, {Exponent(2), Exponent(2)},
                      {Exponent(4, 3), Exponent::infinity()}}) {
    EXPECT_TRUE(duality_extremizers_known(p, r));
    EXPECT_TRUE(duality_sweep(tab, 1, p, r, 7).agree()) << p.str() << " " << r.str();
  }
  EXPECT_FALSE(duality_extremizers_known(Exponent(4, 3), Exponent(4)));
  const auto g = DualFn(tab.space(), random_values(25, 4));
  EXPECT_GE(duality_gap(tab, 1, g, Exponent(2), Exponent(2)), -1e-12);
  EXPECT_EQ(tilde_on_sphere(tab, 1, g).size(), tab.size(1));
  EXPECT_GT(extension_ratio(tab, 1, random_values(tab.size(1), 2), Exponent(2), Exponent(4)), 0.0);
}

TEST(Rti, RandomIndicatorsAndSingleton) {
  const VectorSpace v(Field::make(5), 2);
  const SphereTable tab(v);
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    const auto e = random_set(v, 1 + rng.below(25), rng.next());
    EXPECT_TRUE(rti_audit(e, tab, 1, Exponent(2), Exponent(4), Exponent(3)).pass);
    EXPECT_TRUE(rti_audit(e, tab, 2, Exponent(2), Exponent::infinity(), Exponent(3)).pass);
  }
  const auto one = rti_audit(PointSet(v, {6}), tab, 1, Exponent(2), Exponent(4), Exponent(3));
  EXPECT_NEAR(one.strong, 1.0, 1e-12);
  EXPECT_GE(one.bound, 1.0);
  EXPECT_TRUE(rti_audit(PointSet::full(v), tab, 1, Exponent(2), Exponent(4), Exponent(3)).pass);
  EXPECT_EQ(code_of([&] { (void)rti_audit(PointSet::full(v), tab, 0, Exponent(2), Exponent(4), Exponent(3)); }),
            Errc::zero_radius);
}

TEST(Lemma54, Examples) {
  const VectorSpace v(Field::make(5), 4);
  const SphereTable tab(v);
  const auto mh = max_nonzero_hat(tab, 1);
  const auto s = lemma54_check(PointSet(v, {0}), tab, 1, mh);
  EXPECT_NEAR(s.lhs, double(tab.size(1)), 1e-6);
  EXPECT_NEAR(s.rhs, double(tab.size(1)) + 625.0 * mh.max, 1e-6);
  EXPECT_TRUE(s.pass);
  Rng rng(8);
  for (int i = 0; i < 10; ++i) EXPECT_TRUE(lemma54_check(random_set(v, 1 + rng.below(625), rng.next()), tab, 1, mh).pass);
  const auto full = lemma54_check(PointSet::full(v), tab, 1, mh);
  EXPECT_NEAR(full.lhs, 0.0, 1e-3);
  EXPECT_TRUE(full.pass);
  EXPECT_EQ(code_of([&] { (void)lemma54_check(PointSet::full(v), tab, 0); }), Errc::zero_radius);
}

TEST(WeakProbe, SingletonAndErrors) {
  const SphereTable tab(VectorSpace(Field::make(3), 4));
  const auto r = weak_type_probe(tab, 1, 1);
  EXPECT_EQ(r.r0, Exponent(5, 2));
  EXPECT_GE(r.max_ratio, 1.0 - 1e-12);
  for (const auto& [name, v] : r.family_max) {
    if (name == "singleton") {
      EXPECT_LE(v, 1.0 + 1e-12);
    }
  }
  const SphereTable odd(VectorSpace(Field::make(3), 3));
  EXPECT_EQ(code_of([&] { (void)weak_type_probe(odd, 1, 1); }), Errc::odd_dimension);
  const SphereTable two(VectorSpace(Field::make(3), 2));
  EXPECT_EQ(code_of([&] { (void)weak_type_probe(two, 1, 1); }), Errc::too_small_dimension);
}

TEST(SimpleFunctions, TriangleAndLayers) {
  const SphereTable tab(VectorSpace(Field::make(5), 2));
  const std::vector<double> a{0.5, 1.5, 0.25};
  const std::vector<std::size_t> sizes{tab.size(1), 3, 1};
  const auto r = simple_function_check(tab, 1, a, sizes, Exponent(40, 21), Exponent(4), 3);
  EXPECT_TRUE(r.triangle_holds);
  EXPECT_TRUE(r.layers_match);
  EXPECT_LE(r.lhs, r.triangle * (1 + 1e-12));
}

TEST(ExponentAudit, TheoremOne) {
  const auto e4 = lemma61_estimate(4);
  EXPECT_EQ(e4.ell, rq(24, 19));
  EXPECT_EQ(gamma_main(4, 3), rq(96, 13));
  EXPECT_EQ(exponent_audit(4, 3, e4, gamma_main(4, 3)), 1);
  EXPECT_EQ(lemma61_estimate(6).ell, rq(33, 25));
  EXPECT_EQ(exponent_audit(6, 3, lemma61_estimate(6), gamma_main(6, 3)), 1);
}

TEST(ExponentAudit, TheoremTwo) {
  EXPECT_EQ(lemma62_estimate(8).ell, rq(56, 45));
  EXPECT_EQ(gamma_main(8, 4), 4 * (rq(9, 2) - rq(1, 50)));
  for (int d : {8, 10, 12}) EXPECT_GE(exponent_audit(d, 4, lemma62_estimate(d), gamma_main(d, 4)), 1);
}

TEST(ExponentAudit, TheoremThree) {
  const auto e = lemma63_estimate(8);
  EXPECT_EQ(e.alpha, rq(-7, 48));
  EXPECT_EQ(e.ell, rq(48, 37));
  EXPECT_EQ(gamma_third(8), rq(121, 9));
  EXPECT_EQ(exponent_audit(8, 3, e, gamma_third(8)), 1);
  EXPECT_EQ(code_of([] { (void)exponent_audit(8, 4, lemma63_estimate(8), 1); }), Errc::bad_params);
  EXPECT_EQ(code_of([] { (void)lemma61_estimate(8); }), Errc::bad_params);
}

TEST(ExponentAudit, ShparlinskiBranch) {
  const auto s8 = shparlinski_branch_check(8);
  EXPECT_EQ(s8.exponent, 9 + rq(17, 18));
  EXPECT_TRUE(s8.exceeds);
  EXPECT_TRUE(s8.matches_closed_form);
  for (int d : {10, 12}) EXPECT_GT(shparlinski_branch_check(d).exponent, d + 1);
  EXPECT_EQ(desk_delta2(3, 8, 200, 200, 1).delta, 3u);
}
