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

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ffres {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element of Q(zeta_p) in the power basis 1, zeta, ..., zeta^{p-2}.
/// The representation is canonical, so equality is coefficient equality.
class CycNum {
 public:
  explicit CycNum(int p = 3);

  static CycNum from_rational(int p, const Rational& v);
  static CycNum zeta_power(int p, std::int64_t k);

  /// sum_i counts[i] zeta^i for a length-p count vector.
  static CycNum from_zeta_counts(std::span<const std::int64_t> counts);

  int p() const noexcept { return p_; }
  std::span<const Rational> coeffs() const noexcept { return c_; }

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& s);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }
  CycNum operator-() const;

  /// Complex conjugate, zeta -> zeta^{-1}.
  CycNum conj() const;
  CycNum times_zeta(std::int64_t k) const;
  CycNum pow(unsigned e) const;

  bool is_zero() const noexcept;
  std::optional<Rational> as_rational() const;

  /// Embedding zeta -> exp(2 pi i / p).
  std::complex<double> to_complex() const;

  std::string str() const;

  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  friend class CycAccumulator;
  static CycNum reduce(int p, std::vector<Rational>&& full);

  int p_;
  std::vector<Rational> c_;  // p - 1 coefficients
};

/// Sums of CycNum values times powers of zeta, reduced once at the end.
class CycAccumulator {
 public:
  explicit CycAccumulator(int p);

  void add(const CycNum& v, std::int64_t shift = 0);
  void add(const Rational& v, std::int64_t shift = 0);
  CycNum value() const;
  void clear();

 private:
  int p_;
  std::vector<Rational> slots_;  // p slots, redundant basis
};

/// Element of Z[zeta_p] in the redundant basis 1, ..., zeta^{p-1}. Two
/// vectors denote the same number iff they differ by a constant vector.
/// Arithmetic is overflow-checked and throws Errc::overflow.
class ZetaVec {
 public:
  explicit ZetaVec(int p = 3);

  int p() const noexcept { return p_; }
  std::span<const std::int64_t> raw() const noexcept { return c_; }

  void add_zeta(std::int64_t k, std::int64_t count = 1);
  ZetaVec& operator+=(const ZetaVec& o);
  ZetaVec& operator-=(const ZetaVec& o);
  ZetaVec& operator*=(std::int64_t s);
  friend ZetaVec operator*(const ZetaVec& a, const ZetaVec& b);
  friend ZetaVec operator+(ZetaVec a, const ZetaVec& b) { return a += b; }
  friend ZetaVec operator-(ZetaVec a, const ZetaVec& b) { return a -= b; }
  ZetaVec conj() const;

  CycNum to_cycnum() const;
  std::complex<double> to_complex() const;

  friend bool operator==(const ZetaVec& a, const ZetaVec& b);

 private:
  int p_;
  std::vector<std::int64_t> c_;
};

/// p^e as an exact integer.
Integer int_pow(std::int64_t base, unsigned e);
Rational rat_pow(const Rational& base, int e);

}  // namespace ffres
