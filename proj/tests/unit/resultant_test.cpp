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

#include "ffres/claims.hpp"
#include "ffres/constructions.hpp"
#include "ffres/random.hpp"
#include "ffres/resultant.hpp"
#include "ffres/sphere.hpp"

using namespace ffres;

namespace {

std::vector<PointSet> rand_sets(const VectorSpace& v, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PointSet> s;
  for (int j = 0; j < k; ++j) s.push_back(random_set(v, 1 + rng.below(v.size()), rng.next()));
  return s;
}

std::vector<PointSet> sized(const VectorSpace& v, std::vector<std::uint64_t> sizes, std::uint64_t seed) {
  std::vector<PointSet> s;
  for (auto n : sizes) s.push_back(random_set(v, n, seed++));
  return s;
}

}  // namespace

TEST(Nu, OriginPair) {
  const VectorSpace v(Field::make(3), 2);
  const std::vector<PointSet> s(2, PointSet(v, {0}));
  const auto nu = nu_brute(s);
  EXPECT_EQ(nu.nu, (std::vector<std::uint64_t>{1, 0, 0}));
}

TEST(Nu, FullSets) {
  for (int k : {2, 3}) {
    const VectorSpace v(Field::make(3), 2);
    const SphereTable tab(v);
    const std::vector<PointSet> s(static_cast<std::size_t>(k), PointSet::full(v));
    const auto nu = nu_brute(s);
    for (Element t = 0; t < 3; ++t) EXPECT_EQ(nu.nu[t], static_cast<std::uint64_t>(std::pow(9, k - 1)) * tab.size(t));
    EXPECT_EQ(nu_fourier(s).nu, nu.nu);
  }
}

TEST(Nu, MatchesPairEnumeration) {
  const VectorSpace v(Field::make(3), 2);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = rand_sets(v, 2, seed);
    std::vector<std::uint64_t> want(3, 0);
    for (auto a : s[0].indices())
      for (auto b : s[1].indices()) ++want[v.norm(v.add(a, b))];
    EXPECT_EQ(nu_brute(s).nu, want);
    EXPECT_EQ(nu_enumerate(s).nu, want);
  }
}

TEST(Nu, SingletonsAndOracle) {
  const VectorSpace v(Field::make(5), 2);
  const std::vector<PointSet> single{PointSet(v, {3}), PointSet(v, {8}), PointSet(v, {17})};
  const auto nu = nu_fourier(single);
  for (Element t = 0; t < 5; ++t) EXPECT_EQ(nu.nu[t], v.norm(v.add(v.add(3, 8), 17)) == t ? 1u : 0u);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = rand_sets(v, 3, seed);
    const auto b = nu_brute(s);
    EXPECT_EQ(nu_fourier(s, Mode::exact).nu, b.nu);
    EXPECT_EQ(nu_fourier(s, Mode::floating).nu, b.nu);
    EXPECT_EQ(b.mass(), b.product());
  }
}

TEST(Nu, CapRaisesTooLarge) {
  const VectorSpace v(Field::make(7), 4);
  const std::vector<PointSet> s(2, PointSet::full(v));
  try {
    (void)nu_brute(s, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
  try {
    (void)nu_enumerate(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::too_large);
  }
}

TEST(DeltaSet, Examples) {
  const Field f5 = Field::make(5);
  const auto line = isotropic_line(f5);
  EXPECT_EQ(delta_set(std::vector<PointSet>{line, line}), std::vector<Element>{0});
  const auto sub = subfield_sets(3, 2, 2);
  EXPECT_EQ(sub[0].space().field().q(), 9u);
  EXPECT_EQ(delta_set(sub).size(), 3u);
  const VectorSpace v(Field::make(5), 2);
  EXPECT_EQ(delta_set(std::vector<PointSet>(2, PointSet::full(v))).size(), 5u);
}

TEST(Constructions, Subfield) {
  for (int p : {3, 5})
    for (int k : {2, 3}) EXPECT_EQ(delta_set(subfield_sets(p, 2, k)).size(), static_cast<std::size_t>(p));
  EXPECT_EQ(delta_set(subfield_sets(3, 4, 2)).size(), 3u);
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  EXPECT_EQ(code([] { subfield_sets(4, 2, 2); }), Errc::unsupported_field);
  EXPECT_EQ(code([] { subfield_sets(3, 3, 2); }), Errc::odd_dimension);
  EXPECT_EQ(code([] { isotropic_line(Field::make(3)); }), Errc::minus_one_not_square);
}

TEST(Constructions, Isotropic) {
  for (std::uint64_t q : {5u, 13u}) {
    const auto e = isotropic_line(Field::make(q));
    EXPECT_EQ(e.size(), q);
    EXPECT_EQ(delta_set(std::vector<PointSet>{e, e}).size(), 1u);
  }
}

TEST(Constructions, RandomSet) {
  const VectorSpace v(Field::make(5), 2);
  EXPECT_TRUE(random_set(v, 0, 1).empty());
  EXPECT_EQ(random_set(v, 25, 1), PointSet::full(v));
  EXPECT_EQ(random_set(v, 12, 9), random_set(v, 12, 9));
  try {
    (void)random_set(v, 26, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_out_of_range);
  }
}

TEST(Claims, FullSetsAndBoundary) {
  const VectorSpace v(Field::make(5), 2);
  const std::vector<PointSet> full(2, PointSet::full(v));
  for (const auto& r : {claim1_check(full), claim2_check(full), claim3_check(full)}) {
    EXPECT_TRUE(r.hypothesis);
    EXPECT_TRUE(r.pass) << "claim " << r.claim;
    for (const auto& c : r.subchecks) EXPECT_TRUE(c.pass) << r.claim << " " << c.name;
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto s = sized(v, {15, 15}, seed * 7);
    const auto c1 = claim1_check(s);
    EXPECT_TRUE(c1.hypothesis);
    EXPECT_TRUE(c1.pass);
    EXPECT_TRUE(claim3_check(s).pass);
  }
  const auto s3 = sized(v, {25, 25, 5}, 3);
  const auto c3 = claim3_check(s3);
  EXPECT_TRUE(c3.hypothesis);
  EXPECT_TRUE(c3.pass);
}

TEST(Claims, HypothesisGate) {
  const VectorSpace v(Field::make(5), 2);
  const auto s = sized(v, {2, 3}, 1);
  const auto c1 = claim1_check(s);
  EXPECT_FALSE(c1.hypothesis);
  EXPECT_FALSE(c1.violated());
  const VectorSpace odd(Field::make(3), 3);
  EXPECT_FALSE(claim1_check(std::vector<PointSet>(2, PointSet::full(odd))).hypothesis);
}

TEST(Claims, Claim2AlwaysHolds) {
  for (int d : {2, 3}) {
    const VectorSpace v(Field::make(3), d);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto c = claim2_check(rand_sets(v, 2, seed));
      EXPECT_TRUE(c.hypothesis);
      EXPECT_TRUE(c.pass);
      EXPECT_LE(c.lhs, c.rhs);
      for (const auto& sc : c.subchecks) EXPECT_TRUE(sc.pass) << sc.name;
    }
  }
  const VectorSpace v(Field::make(3), 2);
  const auto single = claim2_check(std::vector<PointSet>{PointSet(v, {0}), PointSet(v, {0})});
  EXPECT_EQ(single.lhs, 1);
}

TEST(Claims, RootTermComparison) {
  // 6 <= 3^{2/2} * 4^{1/2}
  EXPECT_TRUE(leq_root_term(6, 1, 3, 2, 2, 4));
  EXPECT_FALSE(leq_root_term(Rational(61, 10), 1, 3, 2, 2, 4));
}

TEST(Theorem31, CauchySchwarzAndBound) {
  const VectorSpace v(Field::make(5), 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_TRUE(theorem31_chain(rand_sets(v, 2, seed)).cauchy_schwarz);
  const auto r = theorem31_chain(subfield_sets(3, 2, 2));
  EXPECT_EQ(r.delta_size, 3u);
  EXPECT_NEAR(r.bound, 2.25, 1e-9);
  const auto full = theorem31_chain(std::vector<PointSet>(2, PointSet::full(v)));
  EXPECT_TRUE(full.hypothesis);
  EXPECT_NEAR(full.bound, 5.0, 1e-9);
}
