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

#include "ffres/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "ffres/error.hpp"

namespace ffres {

Rearrangement::Rearrangement(std::span<const std::complex<double>> f) {
  v_.reserve(f.size());
  for (const auto& z : f) v_.push_back(std::abs(z));
  std::sort(v_.begin(), v_.end(), std::greater<>());
}

Rearrangement::Rearrangement(std::span<const double> f) {
  v_.reserve(f.size());
  for (double x : f) v_.push_back(std::abs(x));
  std::sort(v_.begin(), v_.end(), std::greater<>());
}

double Rearrangement::operator()(double s) const {
  if (s < 0) fail(Errc::bad_params, "rearrangement is defined on [0, inf)");
  const double n = static_cast<double>(v_.size());
  const auto i = static_cast<std::size_t>(std::floor(s * n));
  return i < v_.size() ? v_[i] : 0.0;
}

double Rearrangement::distribution(double a) const {
  if (a < 0) fail(Errc::bad_params, "distribution function needs a >= 0");
  const auto it = std::partition_point(v_.begin(), v_.end(), [a](double v) { return v > a; });
  return v_.empty() ? 0.0 : static_cast<double>(it - v_.begin()) / static_cast<double>(v_.size());
}

double dist_fn(std::span<const std::complex<double>> f, double a) { return Rearrangement(f).distribution(a); }

double layer_cake_norm(const Rearrangement& f, const Exponent& r) {
  if (r.is_infinite() || r < Exponent(1)) fail(Errc::bad_exponents, "layer cake needs finite r >= 1");
  const double e = r.to_double();
  auto v = std::vector<double>(f.values().begin(), f.values().end());
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  double prev = 0, s = 0;
  for (double u : v) {
    if (u <= prev) continue;
    s += f.distribution(prev) * (std::pow(u, e) - std::pow(prev, e));
    prev = u;
  }
  return std::pow(s, 1.0 / e);
}

double lorentz_norm(const Rearrangement& f, const Exponent& p, const Exponent& r) {
  if (r < Exponent(1)) fail(Errc::bad_exponents, "Lorentz r must lie in [1, inf], got " + r.str());
  const auto v = f.values();
  const double n = static_cast<double>(v.size());
  if (v.empty()) return 0.0;
  if (p.is_infinite()) {
    if (r.is_infinite()) return v.front();
    return v.front() > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  const double ip = p.reciprocal().get_d();
  if (r.is_infinite()) {
    double m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, v[i] * std::pow((i + 1) / n, ip));
    return m;
  }
  const double e = r.to_double();
  const double rp = Rational(r.value() / p.value()).get_d();
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) break;
    s += std::pow(v[i], e) * (std::pow((i + 1) / n, rp) - std::pow(i / n, rp));
  }
  return std::pow(s / rp, 1.0 / e);
}

double lorentz_norm(std::span<const std::complex<double>> f, const Exponent& p, const Exponent& r) {
  return lorentz_norm(Rearrangement(f), p, r);
}

}  // namespace ffres
