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

#include <span>
#include <vector>

#include "ffres/cyclotomic.hpp"
#include "ffres/field.hpp"
#include "ffres/grid.hpp"

namespace ffres {

/// S_t = {x : x_1^2 + ... + x_d^2 = t} for every t in F_q.
class SphereTable {
 public:
  explicit SphereTable(VectorSpace space);

  const VectorSpace& space() const noexcept { return space_; }
  std::span<const Index> points(Element t) const { return pts_.at(t); }
  std::size_t size(Element t) const { return pts_.at(t).size(); }
  std::uint64_t total() const noexcept;

 private:
  VectorSpace space_;
  std::vector<std::vector<Index>> pts_;
};

SphereTable build_spheres(const Field& field, int d, std::uint64_t cap = kDefaultGridCap);

/// q^d S_t^(m) = sum_{x in S_t} chi_a(-x . m) for every t, one pass over x.
std::vector<ZetaVec> sphere_sums(const VectorSpace& space, Index m, Element twist = 1);

CycNum sphere_hat_direct(const SphereTable& table, Element t, Index m, Element twist = 1);
std::vector<CycNum> sphere_hat_direct_all(const VectorSpace& space, Index m, Element twist = 1);

/// Gauss-sum formula for S_t^, even d only:
///   q^{-1} delta_0(m) + q^{-d-1} G^d sum_{l != 0} chi(t l + ||m|| / (4 l)).
class SphereClosedForm {
 public:
  explicit SphereClosedForm(const VectorSpace& space, Element twist = 1);

  /// q^{d+1} S_t^(m) in Z[zeta_p].
  ZetaVec scaled(Element t, Element norm, bool zero_vector) const;
  CycNum value(Element t, Index m) const;
  const ZetaVec& gauss_power() const noexcept { return gd_; }

 private:
  VectorSpace space_;
  Character chi_;
  ZetaVec gd_;
};

CycNum sphere_hat_closed(const VectorSpace& space, Element t, Index m, Element twist = 1);

struct PairSum {
  CycNum lhs;
  CycNum rhs;
  bool equal() const { return lhs == rhs; }
};

/// sum_t S_t^(m) conj(S_t^(v)) against
/// q^{-1} delta_0(m) delta_0(v) + q^{-d-1} sum_{s != 0} chi(s (||m|| - ||v||)).
PairSum pair_sum_check(const VectorSpace& space, Index m, Index v, Element twist = 1);

/// Both sides of pair_sum_check times q^{2d}, from precomputed sphere sums.
std::pair<ZetaVec, ZetaVec> pair_sum_scaled(const VectorSpace& space, std::span<const ZetaVec> sums_m,
                                            std::span<const ZetaVec> sums_v, Index m, Index v,
                                            Element twist = 1);

struct MaxHat {
  double max = 0;
  double ratio = 0;  // max * q^{(d+1)/2}
  Index argmax = 0;
};

/// max over n != 0 of |S_t^(n)|, exhaustively. ZeroRadius for t = 0.
MaxHat max_nonzero_hat(const SphereTable& table, Element t);

template <GridValue V>
struct NormSpectrum {
  std::vector<V> weights;  // indexed by r in F_q
};

/// W(r) = sum_{||m|| = r} F(m).
template <GridValue V>
NormSpectrum<V> norm_spectrum(const GridFn<V, Side::dual>& f) {
  const VectorSpace& space = f.space();
  NormSpectrum<V> out;
  if constexpr (mode_of<V> == Mode::exact) {
    out.weights.assign(space.field().q(), CycNum(space.field().p()));
  } else {
    out.weights.assign(space.field().q(), V{});
  }
  for (Index m = 0; m < space.size(); ++m) out.weights[space.norm(m)] += f.at(m);
  return out;
}

}  // namespace ffres
