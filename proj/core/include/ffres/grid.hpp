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

#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ffres/cyclotomic.hpp"
#include "ffres/error.hpp"
#include "ffres/field.hpp"
#include "ffres/point_set.hpp"

namespace ffres {

using Complex = std::complex<double>;

/// Point space (x, measure dx) or its dual (m, measure dm).
enum class Side { point, dual };

constexpr Side flip(Side s) noexcept { return s == Side::point ? Side::dual : Side::point; }

enum class Mode { exact, floating };

template <typename V>
concept GridValue = std::is_same_v<V, Complex> || std::is_same_v<V, CycNum>;

template <GridValue V>
inline constexpr Mode mode_of = std::is_same_v<V, CycNum> ? Mode::exact : Mode::floating;

/// Function on F_q^d tagged with its side. Side and mode are part of the
/// type, so mixing them is a compile error. Stored values are numerators
/// over p^denom_power (always 0 in float mode unless set explicitly).
template <GridValue V, Side S>
class GridFn {
 public:
  static constexpr Side side = S;
  static constexpr Mode mode = mode_of<V>;
  using value_type = V;

  GridFn(VectorSpace space, std::vector<V> values, int denom_power = 0)
      : space_(std::move(space)), values_(std::move(values)), denom_(denom_power) {
    if (values_.size() != space_.size()) {
      fail(Errc::dimension_mismatch, "grid has " + std::to_string(values_.size()) + " values, expected " +
                                         std::to_string(space_.size()));
    }
    if (denom_ < 0) fail(Errc::bad_params, "negative denominator exponent");
  }

  static GridFn zeros(const VectorSpace& space) {
    if constexpr (mode == Mode::exact) {
      return GridFn(space, std::vector<V>(space.size(), CycNum(space.field().p())));
    } else {
      return GridFn(space, std::vector<V>(space.size(), V{}));
    }
  }

  static GridFn indicator(const PointSet& set) {
    GridFn g = zeros(set.space());
    for (auto v : set.indices()) {
      if constexpr (mode == Mode::exact) {
        g.values_[v] = CycNum::from_rational(set.space().field().p(), 1);
      } else {
        g.values_[v] = 1.0;
      }
    }
    return g;
  }

  const VectorSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const V> numerators() const noexcept { return values_; }
  std::span<V> numerators() noexcept { return values_; }
  int denom_power() const noexcept { return denom_; }

  V at(Index i) const {
    if (denom_ == 0) return values_[i];
    if constexpr (mode == Mode::exact) {
      return values_[i] * Rational(1, int_pow(space_.field().p(), static_cast<unsigned>(denom_)));
    } else {
      return values_[i] * std::pow(static_cast<double>(space_.field().p()), -denom_);
    }
  }

  std::vector<V> values() const {
    std::vector<V> out;
    out.reserve(values_.size());
    for (Index i = 0; i < values_.size(); ++i) out.push_back(at(i));
    return out;
  }

 private:
  VectorSpace space_;
  std::vector<V> values_;
  int denom_;
};

template <Side S>
using FloatGrid = GridFn<Complex, S>;
template <Side S>
using ExactGrid = GridFn<CycNum, S>;

using PointFn = FloatGrid<Side::point>;
using DualFn = FloatGrid<Side::dual>;
using ExactPointFn = ExactGrid<Side::point>;
using ExactDualFn = ExactGrid<Side::dual>;

}  // namespace ffres
