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

#include "ffres/characters.hpp"
#include "ffres/constructions.hpp"
#include "ffres/random.hpp"
#include "ffres/sphere.hpp"
#include "ffres/transform.hpp"

using namespace ffres;

namespace {

CycNum rat(int p, long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return CycNum::from_rational(p, r);
}

Index with_norm(const VectorSpace& v, Element n) {
  for (Index m = 1; m < v.size(); ++m)
    if (v.norm(m) == n) return m;
  return 0;
}

}  // namespace

TEST(Spheres, Counts) {
  const SphereTable t(VectorSpace(Field::make(3), 2));
  EXPECT_EQ(t.size(0), 1u);
  EXPECT_EQ(t.size(1), 4u);
  EXPECT_EQ(t.size(2), 4u);
  EXPECT_EQ(t.total(), 9u);
  const auto b = build_spheres(Field::make(5), 2);
  EXPECT_EQ(b.size(0), 9u);  // -1 is a square mod 5
  EXPECT_THROW(build_spheres(Field::make(13), 5), Error);
}

TEST(Spheres, DirectValues) {
  const VectorSpace v(Field::make(3), 2);
  const SphereTable t(v);
  EXPECT_EQ(sphere_hat_direct(t, 1, 0), rat(3, 4, 9));
  EXPECT_EQ(sphere_hat_direct(t, 1, with_norm(v, 1)), rat(3, 1, 9));
}

TEST(Spheres, ClosedFormExamples) {
  const VectorSpace v(Field::make(3), 2);
  EXPECT_EQ(sphere_hat_closed(v, 1, 0), rat(3, 4, 9));
  const CycNum g = gauss_sum(v.field());
  const CycNum want = rat(3, 1, 3) + g.pow(2) * Rational(1, 27) * (add_char(v.field(), 1) + add_char(v.field(), 2));
  EXPECT_EQ(sphere_hat_closed(v, 1, 0), want);
  for (auto [p, n, d] : {std::tuple{3, 1, 2}, {5, 1, 2}, {3, 2, 2}, {3, 1, 4}}) {
    const VectorSpace w(Field::make(static_cast<std::uint64_t>(p), n), d);
    const SphereTable tab(w);
    const Rational qd = Rational(static_cast<unsigned long>(w.size()));
    const CycNum s0 = rat(p, 1) * Rational(1, static_cast<unsigned long>(w.field().q())) +
                      gauss_sum(w.field()).pow(static_cast<unsigned>(d)) *
                          Rational(static_cast<unsigned long>(w.field().q() - 1),
                                   static_cast<unsigned long>(w.size() * w.field().q()));
    EXPECT_EQ(sphere_hat_closed(w, 0, 0), s0);
    EXPECT_EQ(s0, rat(p, 1) * (Rational(static_cast<unsigned long>(tab.size(0))) / qd));
  }
}

TEST(Spheres, ClosedEqualsDirectRandom) {
  const VectorSpace v(Field::make(5), 2);
  const SphereTable t(v);
  Rng rng(3);
  for (int i = 0; i < 60; ++i) {
    const Element r = static_cast<Element>(rng.below(5));
    const Index m = static_cast<Index>(rng.below(v.size()));
    EXPECT_EQ(sphere_hat_closed(v, r, m), sphere_hat_direct(t, r, m));
  }
  const SphereClosedForm cf(v);
  EXPECT_EQ(cf.value(2, 7), sphere_hat_direct(t, 2, 7));
  EXPECT_EQ(sphere_hat_direct_all(v, 7)[2], sphere_hat_direct(t, 2, 7));
}

TEST(Spheres, OddDimensionRejected) {
  const VectorSpace v(Field::make(3), 3);
  try {
    (void)sphere_hat_closed(v, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::odd_dimension);
  }
}

TEST(PairSum, Examples) {
  for (int d : {2, 4}) {
    const VectorSpace v(Field::make(3), d);
    const Rational q = 3, qd1 = Rational(1, static_cast<unsigned long>(v.size() * 3));
    const auto zero = pair_sum_check(v, 0, 0);
    EXPECT_TRUE(zero.equal());
    EXPECT_EQ(zero.rhs, rat(3, 1) * (Rational(1, 3) + qd1 * 2));
    const Index a = with_norm(v, 1), b = with_norm(v, 2);
    Index c = a + 1;
    while (v.norm(c) != 1 || c == a) ++c;
    EXPECT_EQ(pair_sum_check(v, a, c).rhs, rat(3, 2) * qd1);
    EXPECT_EQ(pair_sum_check(v, a, b).rhs, rat(3, -1) * qd1);
    EXPECT_TRUE(pair_sum_check(v, a, b).equal());
  }
}

TEST(MaxHat, ExhaustiveOracle) {
  for (auto [p, d, t] : {std::tuple{3, 2, 1}, {5, 2, 1}, {3, 4, 2}}) {
    const SphereTable tab(VectorSpace(Field::make(static_cast<std::uint64_t>(p)), d));
    const auto mh = max_nonzero_hat(tab, static_cast<Element>(t));
    double best = 0;
    for (Index m = 1; m < tab.space().size(); ++m)
      best = std::max(best, std::abs(sphere_hat_direct(tab, static_cast<Element>(t), m).to_complex()));
    EXPECT_NEAR(mh.max, best, 1e-12);
    EXPECT_NEAR(mh.ratio, best * std::pow(p, (d + 1) / 2.0), 1e-9);
    EXPECT_LE(mh.ratio, 3.0);
  }
  // at q=3, d=2, t=1 the exhaustive maximum is 2/9
  const SphereTable tab(VectorSpace(Field::make(3), 2));
  EXPECT_NEAR(max_nonzero_hat(tab, 1).max, 2.0 / 9, 1e-12);
  try {
    (void)max_nonzero_hat(tab, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::zero_radius);
  }
}

TEST(NormSpectrum, Examples) {
  const VectorSpace v(Field::make(5), 2);
  const SphereTable tab(v);
  const auto ones = norm_spectrum(DualFn(v, std::vector<Complex>(v.size(), 1.0)));
  for (Element r = 0; r < 5; ++r) EXPECT_NEAR(ones.weights[r].real(), double(tab.size(r)), 1e-12);
  std::vector<CycNum> d(v.size(), rat(5, 0));
  d[0] = rat(5, 1);
  const auto delta = norm_spectrum(ExactDualFn(v, d));
  EXPECT_EQ(delta.weights[0], rat(5, 1));
  for (Element r = 1; r < 5; ++r) EXPECT_TRUE(delta.weights[r].is_zero());
  const auto h = indicator_hat_exact(random_set(v, 9, 4));
  const auto ns = norm_spectrum(h);
  CycNum a(5), b(5);
  for (auto& w : ns.weights) a += w;
  for (Index m = 0; m < v.size(); ++m) b += h.at(m);
  EXPECT_EQ(a, b);
}
