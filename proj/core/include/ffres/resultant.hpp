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
#include <span>
#include <vector>

#include "ffres/cyclotomic.hpp"
#include "ffres/grid.hpp"
#include "ffres/point_set.hpp"

namespace ffres {

inline constexpr std::uint64_t kDefaultBruteCap = 100'000'000;

/// nu_k(t) = #{(x^1..x^k) in E_1 x .. x E_k : ||x^1 + .. + x^k|| = t}.
struct NuProfile {
  int k = 0;
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> nu;  // indexed by t
  std::vector<double> approx;     // float mode only: unrounded values

  Integer product() const;
  Integer mass() const;
};

/// r(s) = #{tuples with x^1 + .. + x^k = s}, by iterated integer convolution.
/// Cost is bounded by q^d * sum |E_j| <= cap, else TooLarge.
std::vector<std::uint64_t> sum_counts(std::span<const PointSet> sets, std::uint64_t cap = kDefaultBruteCap);

NuProfile nu_brute(std::span<const PointSet> sets, std::uint64_t cap = kDefaultBruteCap);

/// Direct k-fold enumeration; only when prod |E_j| <= 10^6.
NuProfile nu_enumerate(std::span<const PointSet> sets);

/// nu_k(t) = q^{dk} sum_m S_t^(m) prod_j conj(E_j^(m)), with m grouped into
/// the classes {0} and {m != 0 : ||m|| = r}.
NuProfile nu_fourier(std::span<const PointSet> sets, Mode mode = Mode::exact, Element twist = 1);

/// {t : nu_k(t) > 0}
std::vector<Element> delta_set(std::span<const PointSet> sets);
std::vector<Element> delta_set(const NuProfile& nu);

}  // namespace ffres
