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

#include "ffres/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ffres/error.hpp"

namespace ffres {

Exponent::Exponent(long num, long den) {
  if (den == 0) fail(Errc::bad_exponents, "zero denominator");
  Rational v(num, den);
  v.canonicalize();
  *this = Exponent(v);
}

Exponent::Exponent(const Rational& v) : v_(v) {
  if (sgn(v) <= 0) fail(Errc::bad_exponents, "exponent must be positive, got " + v.get_str());
  v_->canonicalize();
}

const Rational& Exponent::value() const {
  if (!v_) fail(Errc::bad_exponents, "infinite exponent has no rational value");
  return *v_;
}

double Exponent::to_double() const noexcept {
  return v_ ? v_->get_d() : std::numeric_limits<double>::infinity();
}

Rational Exponent::reciprocal() const { return v_ ? Rational(1 / *v_) : Rational(0); }

Exponent Exponent::conjugate() const {
  if (!v_) return Exponent(1);
  if (*v_ < 1) fail(Errc::bad_exponents, "conjugate needs p >= 1, got " + v_->get_str());
  if (*v_ == 1) return infinity();
  return Exponent(Rational(*v_ / (*v_ - 1)));
}

std::string Exponent::str() const { return v_ ? v_->get_str() : "inf"; }

bool operator==(const Exponent& a, const Exponent& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.v_ == *b.v_;
}

bool operator<(const Exponent& a, const Exponent& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return *a.v_ < *b.v_;
}

MeasureSpace MeasureSpace::dual_counting() { return {MeasureKind::dual_counting, Rational(1)}; }

MeasureSpace MeasureSpace::space_normalized(const VectorSpace& space) {
  return {MeasureKind::space_normalized, Rational(1, static_cast<unsigned long>(space.size()))};
}

MeasureSpace MeasureSpace::sphere(std::size_t sphere_size) {
  if (sphere_size == 0) fail(Errc::bad_params, "empty sphere carries no probability measure");
  return {MeasureKind::sphere_normalized, Rational(1, static_cast<unsigned long>(sphere_size))};
}

namespace {

template <typename T>
double norm_impl(std::span<const T> f, const MeasureSpace& mu, const Exponent& r) {
  if (r < Exponent(1)) fail(Errc::bad_exponents, "norm exponent must be >= 1, got " + r.str());
  if (r.is_infinite()) {
    double m = 0;
    for (const auto& v : f) m = std::max(m, std::abs(v));
    return m;
  }
  const double e = r.to_double();
  double s = 0;
  if (e == 1.0) {
    for (const auto& v : f) s += std::abs(v);
    return s * mu.weight().get_d();
  }
  if (e == 2.0) {
    for (const auto& v : f) s += std::norm(v);
    return std::sqrt(s * mu.weight().get_d());
  }
  for (const auto& v : f) s += std::pow(std::abs(v), e);
  return std::pow(s * mu.weight().get_d(), 1.0 / e);
}

}  // namespace

double norm(std::span<const std::complex<double>> f, const MeasureSpace& mu, const Exponent& r) {
  return norm_impl(f, mu, r);
}

double norm(std::span<const double> f, const MeasureSpace& mu, const Exponent& r) { return norm_impl(f, mu, r); }

}  // namespace ffres
