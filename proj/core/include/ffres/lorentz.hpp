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
#include <span>
#include <vector>

#include "ffres/measure.hpp"

namespace ffres {

/// Decreasing rearrangement of |f| on a probability space of N equal atoms:
/// f*(s) = v_i on [(i-1)/N, i/N) with v_1 >= .. >= v_N.
class Rearrangement {
 public:
  explicit Rearrangement(std::span<const std::complex<double>> f);
  explicit Rearrangement(std::span<const double> f);

  std::size_t atoms() const noexcept { return v_.size(); }
  std::span<const double> values() const noexcept { return v_; }

  double operator()(double s) const;
  /// d_f(a) = sigma{|f| > a}
  double distribution(double a) const;

 private:
  std::vector<double> v_;
};

double dist_fn(std::span<const std::complex<double>> f, double a);

/// (r int_0^inf a^{r-1} d_f(a) da)^{1/r} over the breakpoints of d_f.
double layer_cake_norm(const Rearrangement& f, const Exponent& r);

/// (int_0^1 (s^{1/p} f*(s))^r ds / s)^{1/r}; sup_s s^{1/p} f*(s) for r = inf.
double lorentz_norm(const Rearrangement& f, const Exponent& p, const Exponent& r);
double lorentz_norm(std::span<const std::complex<double>> f, const Exponent& p, const Exponent& r);

inline double weak_norm(const Rearrangement& f, const Exponent& p) {
  return lorentz_norm(f, p, Exponent::infinity());
}

}  // namespace ffres
