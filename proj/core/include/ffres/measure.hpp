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

#include <complex>
#include <optional>
#include <span>
#include <string>

#include "ffres/cyclotomic.hpp"
#include "ffres/field.hpp"

namespace ffres {

/// Positive rational exponent or infinity. Conjugates are exact.
class Exponent {
 public:
  Exponent(long num, long den = 1);
  explicit Exponent(const Rational& v);
  static Exponent infinity() { return Exponent(); }

  bool is_infinite() const noexcept { return !v_; }
  const Rational& value() const;
  double to_double() const noexcept;
  /// 1/p, zero at infinity.
  Rational reciprocal() const;
  /// p' with 1/p + 1/p' = 1; needs p >= 1.
  Exponent conjugate() const;
  std::string str() const;

  friend bool operator==(const Exponent& a, const Exponent& b);
  friend bool operator<(const Exponent& a, const Exponent& b);
  friend bool operator<=(const Exponent& a, const Exponent& b) { return !(b < a); }

 private:
  Exponent() = default;
  std::optional<Rational> v_;
};

enum class MeasureKind { dual_counting, space_normalized, sphere_normalized };

/// Uniform measure with weight 1 (dm), q^{-d} (dx) or 1/|S_t| (d sigma).
class MeasureSpace {
 public:
  static MeasureSpace dual_counting();
  static MeasureSpace space_normalized(const VectorSpace& space);
  static MeasureSpace sphere(std::size_t sphere_size);

  MeasureKind kind() const noexcept { return kind_; }
  const Rational& weight() const noexcept { return weight_; }
  Rational total_mass(std::size_t atoms) const { return weight_ * Rational(static_cast<unsigned long>(atoms)); }

 private:
  MeasureSpace(MeasureKind k, Rational w) : kind_(k), weight_(std::move(w)) {}
  MeasureKind kind_;
  Rational weight_;
};

/// (sum w |f|^r)^{1/r}, or max |f| for r = infinity. Needs r >= 1.
double norm(std::span<const std::complex<double>> f, const MeasureSpace& mu, const Exponent& r);
double norm(std::span<const double> f, const MeasureSpace& mu, const Exponent& r);

}  // namespace ffres
