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

#include "ffres/grid.hpp"

namespace ffres {

enum class Kernel { naive, axis };

/// out[m] = sum_x in[x] zeta_p^{sign Tr(a x . m)}, unscaled. The axis kernel
/// applies one length-q character transform per axis.
void character_transform(const VectorSpace& space, std::span<const Complex> in, std::span<Complex> out,
                         int sign, Element twist = 1, Kernel kernel = Kernel::axis);

/// f^(m) = q^{-d} sum_x f(x) chi(-x . m)
DualFn hat(const PointFn& f, Kernel kernel = Kernel::axis, Element twist = 1);
ExactDualFn hat(const ExactPointFn& f, Element twist = 1);

/// g~(x) = sum_m g(m) chi(-x . m)
PointFn tilde(const DualFn& g, Kernel kernel = Kernel::axis, Element twist = 1);
ExactPointFn tilde(const ExactDualFn& g, Element twist = 1);

/// f(x) = sum_m f^(m) chi(m . x)
PointFn inverse(const DualFn& fh, Kernel kernel = Kernel::axis, Element twist = 1);
ExactPointFn inverse(const ExactDualFn& fh, Element twist = 1);

/// hat on the point side, tilde on the dual side, through the axis kernel.
template <Side S>
FloatGrid<flip(S)> fast_axis_transform(const FloatGrid<S>& f, Element twist = 1);
/// Exact grids always go through naive summation; this throws
/// ExactModeUnsupported.
template <Side S>
ExactGrid<flip(S)> fast_axis_transform(const ExactGrid<S>& f, Element twist = 1);

/// Same output as fast_axis_transform by direct O(q^{2d}) summation.
template <Side S>
FloatGrid<flip(S)> naive_transform(const FloatGrid<S>& f, Element twist = 1);

/// Exact hat of an indicator via integer root-of-unity counts.
ExactDualFn indicator_hat_exact(const PointSet& set, Element twist = 1);

/// | sum_m |f^(m)|^2 - q^{-d} sum_x |f(x)|^2 |
double plancherel_defect(const PointFn& f);
double plancherel_defect(const ExactPointFn& f);

/// (f*g)(s) = sum_a f(a) g(s-a), through hat, product, inverse and q^d.
PointFn convolve(const PointFn& f, const PointFn& g);
ExactPointFn convolve(const ExactPointFn& f, const ExactPointFn& g);

struct HolderSides {
  double lhs = 0;
  double rhs = 0;
  bool holds(double tol = 1e-9) const { return lhs <= rhs + tol * (1 + rhs); }
};

/// sum_D prod |f_i| <= prod ||f_i||_{L^{p_i}(D)} with sum 1/p_i = 1 checked
/// exactly. An empty domain means all of F_q^d.
template <Side S>
HolderSides gen_holder_check(std::span<const FloatGrid<S>> fns, std::span<const Rational> exponents,
                             std::span<const Index> domain = {});

/// sum_m prod_j |E_j^(m)| against q^{-dk+d} (prod |E_j|)^{(k-1)/k}.
HolderSides lemma21_check(std::span<const PointSet> sets);

}  // namespace ffres
