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
#include "ffres/random.hpp"
#include "ffres/transform.hpp"

using namespace ffres;

namespace {

template <class G>
concept Hattable = requires(const G& g) { hat(g); };
template <class G>
concept Tildeable = requires(const G& g) { tilde(g); };
template <class G>
concept Invertible = requires(const G& g) { inverse(g); };
template <class A, class B>
concept Convolvable = requires(const A& a, const B& b) { convolve(a, b); };

static_assert(Hattable<PointFn> && Hattable<ExactPointFn>);
static_assert(!Hattable<DualFn> && !Hattable<ExactDualFn>);
static_assert(Tildeable<DualFn> && !Tildeable<PointFn>);
static_assert(Invertible<ExactDualFn> && !Invertible<ExactPointFn>);
static_assert(Convolvable<PointFn, PointFn> && !Convolvable<DualFn, DualFn>);
static_assert(!Convolvable<PointFn, ExactPointFn>);
static_assert(decltype(hat(std::declval<PointFn>()))::side == Side::dual);
static_assert(decltype(tilde(std::declval<DualFn>()))::side == Side::point);

PointFn random_fn(const VectorSpace& v, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Complex> x(v.size());
  for (auto& z : x) z = {rng.unit() - 0.5, rng.unit() - 0.5};
  return PointFn(v, std::move(x));
}

double max_diff(const auto& a, const auto& b) {
  double m = 0;
  for (Index i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.at(i) - b.at(i)));
  return m;
}

CycNum rat(int p, long a, long b = 1) {
  Rational r(a, b);
  r.canonicalize();
  return CycNum::from_rational(p, r);
}

}  // namespace

TEST(Transform, HatOfOrigin) {
  const VectorSpace v(Field::make(3), 2);
  const auto h = hat(ExactPointFn::indicator(PointSet(v, {0})));
  for (Index m = 0; m < v.size(); ++m) EXPECT_EQ(h.at(m), rat(3, 1, 9));
  const auto he = indicator_hat_exact(PointSet(v, {0}));
  for (Index m = 0; m < v.size(); ++m) EXPECT_EQ(he.at(m), rat(3, 1, 9));
}

TEST(Transform, HatOfFullSpaceIsDelta) {
  const VectorSpace v(Field::make(3, 2), 2);
  const auto h = indicator_hat_exact(PointSet::full(v));
  for (Index m = 0; m < v.size(); ++m) EXPECT_EQ(h.at(m), rat(3, m == 0 ? 1 : 0));
}

TEST(Transform, HatAtZeroCountsPoints) {
  const VectorSpace v(Field::make(5), 2);
  const auto e = random_set(v, 7, 3);
  EXPECT_EQ(indicator_hat_exact(e).at(0), rat(5, 7, 25));
  EXPECT_NEAR(std::abs(hat(PointFn::indicator(e)).at(0) - Complex(7.0 / 25)), 0, 1e-12);
  // direct summation oracle at every m
  const auto h = indicator_hat_exact(e);
  for (Index m = 0; m < v.size(); ++m) {
    CycAccumulator acc(5);
    for (auto x : e.indices()) acc.add(Rational(1, 25), -v.dot_trace(x, m));
    EXPECT_EQ(h.at(m), acc.value());
  }
}

TEST(Transform, TildeExamples) {
  const VectorSpace v(Field::make(3), 2);
  std::vector<CycNum> d(v.size(), rat(3, 0)), one(v.size(), rat(3, 1));
  d[0] = rat(3, 1);
  const auto a = tilde(ExactDualFn(v, d));
  const auto b = tilde(ExactDualFn(v, one));
  for (Index x = 0; x < v.size(); ++x) {
    EXPECT_EQ(a.at(x), rat(3, 1));
    EXPECT_EQ(b.at(x), rat(3, x == 0 ? 9 : 0));
  }
  const auto inv = inverse(ExactDualFn(v, d));
  for (Index x = 0; x < v.size(); ++x) EXPECT_EQ(inv.at(x), rat(3, 1));
}

TEST(Transform, TildeMatchesScaledHat) {
  const VectorSpace v(Field::make(3), 3);
  const auto e = random_set(v, 11, 5);
  const auto h = hat(PointFn::indicator(e));
  std::vector<Complex> g(v.size());
  for (auto x : e.indices()) g[x] = 1.0;
  const auto t = tilde(DualFn(v, g));
  for (Index m = 0; m < v.size(); ++m) EXPECT_NEAR(std::abs(t.at(m) / 27.0 - h.at(m)), 0, 1e-12);
}

TEST(Transform, InversionExactAndFloat) {
  const VectorSpace v(Field::make(3, 2), 2);
  Rng rng(9);
  std::vector<CycNum> x;
  for (Index i = 0; i < v.size(); ++i) x.push_back(rat(3, static_cast<long>(rng.below(7)) - 3, 2));
  const ExactPointFn f(v, x);
  const auto back = inverse(hat(f));
  for (Index i = 0; i < v.size(); ++i) EXPECT_EQ(back.at(i), f.at(i));
  EXPECT_EQ(plancherel_defect(f), 0.0);
  const auto g = random_fn(VectorSpace(Field::make(7), 3), 4);
  EXPECT_LT(max_diff(inverse(hat(g)), g), 1e-10);
}

TEST(Transform, Plancherel) {
  const VectorSpace v(Field::make(5), 2);
  EXPECT_EQ(plancherel_defect(PointFn::zeros(v)), 0.0);
  EXPECT_LT(plancherel_defect(random_fn(v, 1)), 1e-10);
}

TEST(Transform, Convolution) {
  const VectorSpace v(Field::make(3), 2);
  const auto full = ExactPointFn::indicator(PointSet::full(v));
  const auto c = convolve(full, full);
  for (Index x = 0; x < v.size(); ++x) EXPECT_EQ(c.at(x), rat(3, 9));
  const auto e = random_set(v, 4, 2), f = random_set(v, 5, 3);
  const auto cf = convolve(PointFn::indicator(e), PointFn::indicator(f));
  for (Index s = 0; s < v.size(); ++s) {
    int n = 0;
    for (auto a : e.indices()) n += f.contains(v.sub(s, a)) ? 1 : 0;
    EXPECT_NEAR(std::abs(cf.at(s) - Complex(n)), 0, 1e-10);
  }
}

TEST(Transform, AxisMatchesNaive) {
  const VectorSpace big(Field::make(7), 4);
  const auto f = random_fn(big, 77);
  EXPECT_LT(max_diff(fast_axis_transform(f), naive_transform(f)), 1e-9);
  const VectorSpace v(Field::make(5), 3);
  double worst = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto g = random_fn(v, s);
    worst = std::max(worst, max_diff(fast_axis_transform(g), naive_transform(g)));
  }
  EXPECT_LT(worst, 1e-9);
  std::vector<Complex> d(v.size());
  d[0] = 1.0;
  const auto out = fast_axis_transform(PointFn(v, d));
  for (Index m = 0; m < v.size(); ++m) EXPECT_NEAR(std::abs(out.at(m) - out.at(0)), 0, 1e-15);
  const VectorSpace f9(Field::make(3, 2), 2);
  const auto h = random_fn(f9, 3);
  EXPECT_LT(max_diff(hat(h, Kernel::axis), hat(h, Kernel::naive)), 1e-10);
}

TEST(Transform, ExactAxisUnsupported) {
  const VectorSpace v(Field::make(3), 2);
  try {
    (void)fast_axis_transform(ExactPointFn::zeros(v));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::exact_mode_unsupported);
  }
}

TEST(Transform, DimensionMismatch) {
  const VectorSpace v(Field::make(3), 2);
  EXPECT_THROW(PointFn(v, std::vector<Complex>(5)), Error);
  const VectorSpace w(Field::make(5), 2);
  const std::vector<PointSet> sets{PointSet::full(v), PointSet::full(w)};
  try {
    (void)lemma21_check(sets);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

TEST(Holder, CauchySchwarzAndEquality) {
  const VectorSpace v(Field::make(5), 2);
  const std::vector<Rational> two{Rational(2), Rational(2)};
  for (std::uint64_t s = 0; s < 10; ++s) {
    const std::vector<PointFn> fns{random_fn(v, s), random_fn(v, s + 100)};
    EXPECT_TRUE(gen_holder_check<Side::point>(fns, two).holds());
  }
  const auto f = random_fn(v, 5);
  const std::vector<PointFn> same{f, f, f};
  const std::vector<Rational> three(3, Rational(3));
  const auto h = gen_holder_check<Side::point>(same, three);
  EXPECT_NEAR(h.lhs, h.rhs, 1e-9 * h.rhs);
  const std::vector<PointFn> ind{PointFn::indicator(random_set(v, 6, 1)), PointFn::indicator(random_set(v, 9, 2)),
                                 PointFn::indicator(random_set(v, 12, 3))};
  EXPECT_TRUE(gen_holder_check<Side::point>(ind, three).holds());
  const std::vector<Rational> bad{Rational(2), Rational(3)};
  try {
    (void)gen_holder_check<Side::point>(std::span<const PointFn>(same).first(2), bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::bad_exponents);
  }
}

TEST(Lemma21, Examples) {
  const VectorSpace v(Field::make(5), 2);
  const std::vector<PointSet> full(3, PointSet::full(v));
  EXPECT_TRUE(lemma21_check(full).holds());
  const std::vector<PointSet> single{PointSet(v, {3}), PointSet(v, {7})};
  const auto s = lemma21_check(single);
  EXPECT_NEAR(s.lhs, std::pow(25.0, -1), 1e-12);
  EXPECT_NEAR(s.lhs, s.rhs, 1e-12);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    std::vector<PointSet> sets;
    for (int j = 0; j < 3; ++j) sets.push_back(random_set(v, 1 + rng.below(25), rng.next()));
    EXPECT_TRUE(lemma21_check(sets).holds());
  }
}
