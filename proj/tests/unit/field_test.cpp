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

#include <set>

#include "ffres/characters.hpp"
#include "ffres/cyclotomic.hpp"
#include "ffres/error.hpp"
#include "ffres/field.hpp"
#include "ffres/random.hpp"

using namespace ffres;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::internal;
}

}  // namespace

TEST(Field, PrimeField) {
  const Field f = Field::make(3);
  EXPECT_EQ(f.q(), 3u);
  EXPECT_EQ(f.mul(2, 2), 1u);
  EXPECT_EQ(f.neg(1), 2u);
  EXPECT_EQ(f.trace(2), 2);
}

TEST(Field, Errors) {
  EXPECT_EQ(code_of([] { Field::make(2); }), Errc::even_characteristic);
  EXPECT_EQ(code_of([] { Field::make(9); }), Errc::non_prime);
  EXPECT_EQ(code_of([] { Field::make(3, 12); }), Errc::too_large);
}

TEST(Field, ModulusIsIrreducible) {
  for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 3}, {7, 2}, {3, 4}}) {
    const Field f = Field::make(static_cast<std::uint64_t>(p), n);
    const auto m = f.modulus();
    ASSERT_EQ(m.size(), static_cast<std::size_t>(n + 1));
    EXPECT_EQ(m[n], 1);
    if (n <= 3) {
      // no roots in F_p
      for (int x = 0; x < p; ++x) {
        long v = 0, xp = 1;
        for (int i = 0; i <= n; ++i, xp = xp * x % p) v = (v + m[i] * xp) % p;
        EXPECT_NE(v, 0) << p << "^" << n << " root " << x;
      }
    }
  }
}

TEST(Field, AxiomsExhaustive) {
  for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 3}}) {
    const Field f = Field::make(static_cast<std::uint64_t>(p), n);
    const Element q = f.q();
    for (Element a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      for (Element b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        EXPECT_EQ(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % p);
        for (Element c = 0; c < q; c += 3) EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

TEST(Field, TraceIsSurjectiveAndFrobeniusSum) {
  const Field f = Field::make(3, 2);
  std::set<int> seen;
  for (Element x = 0; x < f.q(); ++x) {
    seen.insert(f.trace(x));
    EXPECT_EQ(f.from_int(f.trace(x)), f.add(x, f.pow(x, 3)));
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Field, QuadraticCharacter) {
  const Field f3 = Field::make(3);
  EXPECT_EQ(f3.quad_char(0), 0);
  EXPECT_EQ(f3.quad_char(1), 1);
  EXPECT_EQ(f3.quad_char(2), -1);
  const Field f9 = Field::make(3, 2);
  EXPECT_EQ(f9.quad_char(f9.generator()), -1);
  EXPECT_EQ(quad_char(f9, f9.generator()), -1);
  int squares = 0;
  for (Element x = 1; x < f9.q(); ++x) squares += f9.is_square(x) ? 1 : 0;
  EXPECT_EQ(squares, 4);
}

TEST(Field, SqrtAndGenerator) {
  const Field f5 = Field::make(5);
  EXPECT_EQ(f5.sqrt(f5.neg(1)), 2u);
  EXPECT_FALSE(Field::make(3).sqrt(2).has_value());
  const Field f13 = Field::make(13);
  EXPECT_EQ(f13.sqrt(12), 5u);
  const Field f25 = Field::make(5, 2);
  std::set<Element> powers;
  Element g = 1;
  for (int i = 0; i < 24; ++i, g = f25.mul(g, f25.generator())) powers.insert(g);
  EXPECT_EQ(powers.size(), 24u);
}

TEST(Field, DigitsRoundTrip) {
  const Field f = Field::make(5, 2);
  for (Element x = 0; x < f.q(); ++x) EXPECT_EQ(f.from_digits(f.digits(x)), x);
}

TEST(VectorSpace, CoordinatesAndNorm) {
  const VectorSpace v(Field::make(5), 3);
  EXPECT_EQ(v.size(), 125u);
  const std::vector<Element> x{1, 2, 3};
  const Index i = v.encode(x);
  EXPECT_EQ(i, 1u * 25 + 2 * 5 + 3);
  EXPECT_EQ(v.coord(i, 0), 1u);
  EXPECT_EQ(v.norm(i), (1 + 4 + 9) % 5u);
  EXPECT_EQ(v.add(i, v.neg(i)), 0u);
  EXPECT_EQ(v.scale(2, i), v.add(i, i));
  EXPECT_EQ(v.dot_trace(i, i), static_cast<int>(v.norm(i)));
  EXPECT_EQ(code_of([] { VectorSpace(Field::make(13), 5); }), Errc::too_large);
}

TEST(Characters, Values) {
  const Field f3 = Field::make(3);
  EXPECT_EQ(add_char(f3, 0), CycNum::from_rational(3, 1));
  EXPECT_EQ(add_char(f3, 1), CycNum::zeta_power(3, 1));
  const Field f9 = Field::make(3, 2);
  Element x = 0;
  while (f9.trace(x) != 2) ++x;
  EXPECT_EQ(add_char(f9, x), CycNum::zeta_power(3, 2));
}

TEST(Characters, Orthogonality) {
  const VectorSpace v2(Field::make(3), 2);
  EXPECT_EQ(char_orthogonality_sum(v2, 0), CycNum::from_rational(3, 9));
  const std::vector<Element> m{1, 0};
  EXPECT_TRUE(char_orthogonality_sum(v2, v2.encode(m)).is_zero());
  const VectorSpace v1(Field::make(5), 1);
  EXPECT_TRUE(char_orthogonality_sum(v1, 2).is_zero());
}

TEST(Characters, GaussSums) {
  const Field f3 = Field::make(3);
  EXPECT_EQ(gauss_sum(f3), CycNum::zeta_power(3, 1) - CycNum::zeta_power(3, 2));
  for (auto [p, n] : {std::pair{3, 1}, {5, 1}, {3, 2}, {7, 1}, {5, 2}, {3, 3}, {11, 2}}) {
    const Field f = Field::make(static_cast<std::uint64_t>(p), n);
    const CycNum g = gauss_sum(f);
    EXPECT_EQ(g * g.conj(), CycNum::from_rational(p, Rational(static_cast<unsigned long>(f.q()))));
    EXPECT_EQ(gauss_sum_vec(f).to_cycnum(), g);
  }
}

TEST(Cyclotomic, Arithmetic) {
  const CycNum z = CycNum::zeta_power(5, 1);
  EXPECT_EQ(z.pow(5), CycNum::from_rational(5, 1));
  CycNum s(5);
  for (int i = 0; i < 5; ++i) s += CycNum::zeta_power(5, i);
  EXPECT_TRUE(s.is_zero());
  EXPECT_EQ(z.conj(), CycNum::zeta_power(5, 4));
  EXPECT_EQ(z.times_zeta(3), CycNum::zeta_power(5, 4));
  const CycNum h = z * Rational(81, 27);
  EXPECT_EQ(h, CycNum::zeta_power(5, 1) * Rational(3));
  EXPECT_NEAR(std::abs(z.to_complex() - std::polar(1.0, 2 * M_PI / 5)), 0.0, 1e-12);
  EXPECT_EQ(CycNum::from_rational(3, 2), CycNum::from_rational(5, 2));
}

TEST(Cyclotomic, ZetaVecEqualityModConstants) {
  ZetaVec a(3), b(3);
  a.add_zeta(0, 2);
  a.add_zeta(1, 1);
  a.add_zeta(2, 1);
  b.add_zeta(0, 1);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.to_cycnum(), b.to_cycnum());
  ZetaVec big(3);
  big.add_zeta(0, INT64_MAX);
  EXPECT_THROW(big += big, Error);
}

TEST(Random, Determinism) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  Rng r(1);
  const auto s = r.sample(50, 20);
  EXPECT_EQ(std::set<std::uint64_t>(s.begin(), s.end()).size(), 20u);
  for (auto v : s) EXPECT_LT(v, 50u);
}
