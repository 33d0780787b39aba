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
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace ffres {

/// Field element. The integer sum_i c_i p^i encodes the residue class of
/// sum_i c_i x^i modulo the field's defining polynomial.
using Element = std::uint32_t;

/// Vector in F_q^d. Coordinates are base-q digits with x_0 most significant,
/// so sorting indices sorts vectors lexicographically.
using Index = std::uint32_t;

inline constexpr std::uint64_t kDefaultFieldCap = 28561;  // 13^4
inline constexpr std::uint64_t kDefaultGridCap = 28561;

bool is_prime(std::uint64_t n) noexcept;

/// Finite field F_{p^n} with p odd. Cheap to copy; the lookup tables are
/// shared and immutable.
class Field {
 public:
  /// Builds F_{p^n}. The defining polynomial is the monic irreducible of
  /// degree n whose coefficients (read from x^{n-1} down to x^0) are
  /// lexicographically smallest.
  static Field make(std::uint64_t p, int n = 1, std::uint64_t cap = kDefaultFieldCap);

  int p() const noexcept;
  int n() const noexcept;
  Element q() const noexcept;

  /// Coefficients c_0..c_n of the defining polynomial, c_n = 1.
  std::span<const int> modulus() const noexcept;

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept;
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const noexcept;

  /// Absolute trace to F_p, returned as an integer in [0, p).
  int trace(Element a) const noexcept;

  /// Quadratic character: 0 at 0, 1 on nonzero squares, -1 otherwise.
  int quad_char(Element a) const noexcept;
  bool is_square(Element a) const noexcept { return quad_char(a) >= 0; }

  /// Square root with the smallest encoding, if one exists.
  std::optional<Element> sqrt(Element a) const;

  /// Primitive element with the smallest encoding.
  Element generator() const noexcept;

  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const noexcept;

  std::vector<int> digits(Element a) const;
  Element from_digits(std::span<const int> digits) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p() == b.p() && a.n() == b.n();
  }

 private:
  struct Tables;
  explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
  std::shared_ptr<const Tables> t_;
};

/// The canonical additive character twisted by a nonzero field element:
/// chi_a(x) = zeta_p^{Tr(a x)}.
class Character {
 public:
  explicit Character(Field field, Element twist = 1);

  const Field& field() const noexcept { return field_; }
  Element twist() const noexcept { return twist_; }

  /// Exponent k in [0, p) with chi_a(x) = zeta_p^k.
  int exponent(Element x) const noexcept { return field_.trace(field_.mul(twist_, x)); }

 private:
  Field field_;
  Element twist_;
};

/// F_q^d with precomputed coordinates, norms ||x|| = sum x_i^2, and the
/// trace form (x, m) -> Tr(x . m).
class VectorSpace {
 public:
  VectorSpace(Field field, int dim, std::uint64_t cap = kDefaultGridCap);

  const Field& field() const noexcept;
  int dim() const noexcept;
  Index size() const noexcept;
  Index stride(int axis) const noexcept;

  Element coord(Index v, int axis) const noexcept;
  std::span<const Element> coords(Index v) const noexcept;
  Index encode(std::span<const Element> x) const;

  Index add(Index a, Index b) const noexcept;
  Index sub(Index a, Index b) const noexcept;
  Index neg(Index a) const noexcept;
  Index scale(Element c, Index v) const noexcept;

  Element norm(Index v) const noexcept;

  /// Tr(x . m) as an integer in [0, p).
  int dot_trace(Index x, Index m) const noexcept;

  /// Tr(a b) for a, b in F_q, from a cached table when q is small.
  int trace_mul(Element a, Element b) const noexcept;

  friend bool operator==(const VectorSpace& a, const VectorSpace& b) noexcept {
    return a.field() == b.field() && a.dim() == b.dim();
  }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace ffres
