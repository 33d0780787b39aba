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

#include "ffres/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ffres/error.hpp"

namespace ffres {

namespace {

void check_same_p(int a, int b) {
  if (a != b) fail(Errc::mode_mismatch, "cyclotomic values over different roots of unity");
}

std::int64_t mod_p(std::int64_t k, int p) {
  const std::int64_t r = k % p;
  return r < 0 ? r + p : r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "Z[zeta] coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "Z[zeta] coefficient overflow");
  return r;
}

}  // namespace

CycNum::CycNum(int p) : p_(p), c_(static_cast<std::size_t>(p - 1)) {
  if (p < 2) fail(Errc::bad_params, "root-of-unity order must be >= 2");
}

CycNum CycNum::reduce(int p, std::vector<Rational>&& full) {
  // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
  CycNum out(p);
  const Rational top = full[p - 1];
  for (int i = 0; i < p - 1; ++i) out.c_[i] = std::move(full[i]) - top;
  return out;
}

CycNum CycNum::from_rational(int p, const Rational& v) {
  CycNum out(p);
  out.c_[0] = v;
  return out;
}

CycNum CycNum::zeta_power(int p, std::int64_t k) {
  std::vector<Rational> full(p);
  full[mod_p(k, p)] = 1;
  return reduce(p, std::move(full));
}

CycNum CycNum::from_zeta_counts(std::span<const std::int64_t> counts) {
  const int p = static_cast<int>(counts.size());
  CycNum out(p);
  const std::int64_t top = counts[p - 1];
  for (int i = 0; i < p - 1; ++i) {
    // Difference of two int64 counts may exceed int64; go through mpz.
    out.c_[i] = Rational(Integer(static_cast<long>(counts[i])) - Integer(static_cast<long>(top)));
  }
  return out;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same_p(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same_p(p_, o.p_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  check_same_p(p_, o.p_);
  std::vector<Rational> full(p_);
  const int m = p_ - 1;
  for (int i = 0; i < m; ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (sgn(o.c_[j]) == 0) continue;
      int k = i + j;
      if (k >= p_) k -= p_;
      full[k] += c_[i] * o.c_[j];
    }
  }
  *this = reduce(p_, std::move(full));
  return *this;
}

CycNum& CycNum::operator*=(const Rational& s) {
  Rational v = s;
  v.canonicalize();
  for (auto& c : c_) c *= v;
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out(*this);
  for (auto& c : out.c_) c = -c;
  return out;
}

CycNum CycNum::conj() const {
  std::vector<Rational> full(p_);
  full[0] = c_[0];
  for (int i = 1; i < p_ - 1; ++i) full[p_ - i] = c_[i];
  return reduce(p_, std::move(full));
}

CycNum CycNum::times_zeta(std::int64_t k) const {
  std::vector<Rational> full(p_);
  const auto s = mod_p(k, p_);
  for (int i = 0; i < p_ - 1; ++i) full[(i + s) % p_] = c_[i];
  return reduce(p_, std::move(full));
}

CycNum CycNum::pow(unsigned e) const {
  CycNum r = from_rational(p_, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

bool CycNum::is_zero() const noexcept {
  for (const auto& c : c_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (sgn(c_[i]) != 0) return std::nullopt;
  }
  return c_[0];
}

std::complex<double> CycNum::to_complex() const {
  std::complex<double> s = 0;
  for (int i = 0; i < p_ - 1; ++i) {
    if (sgn(c_[i]) == 0) continue;
    const double angle = 2.0 * std::numbers::pi * i / p_;
    s += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return s;
}

std::string CycNum::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < p_ - 1; ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
  }
  if (first) os << "0";
  return os.str();
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.p_ != b.p_) {
    auto ra = a.as_rational(), rb = b.as_rational();
    return ra && rb && *ra == *rb;
  }
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] != b.c_[i]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

CycAccumulator::CycAccumulator(int p) : p_(p), slots_(static_cast<std::size_t>(p)) {}

void CycAccumulator::add(const CycNum& v, std::int64_t shift) {
  check_same_p(p_, v.p());
  const auto s = mod_p(shift, p_);
  const auto c = v.coeffs();
  for (int i = 0; i < p_ - 1; ++i) {
    if (sgn(c[i]) == 0) continue;
    slots_[(i + s) % p_] += c[i];
  }
}

void CycAccumulator::add(const Rational& v, std::int64_t shift) { slots_[mod_p(shift, p_)] += v; }

CycNum CycAccumulator::value() const {
  auto copy = slots_;
  return CycNum::reduce(p_, std::move(copy));
}

void CycAccumulator::clear() {
  for (auto& s : slots_) s = 0;
}

// ---------------------------------------------------------------------------

ZetaVec::ZetaVec(int p) : p_(p), c_(static_cast<std::size_t>(p), 0) {}

void ZetaVec::add_zeta(std::int64_t k, std::int64_t count) {
  auto& slot = c_[mod_p(k, p_)];
  slot = checked_add(slot, count);
}

ZetaVec& ZetaVec::operator+=(const ZetaVec& o) {
  check_same_p(p_, o.p_);
  for (int i = 0; i < p_; ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

ZetaVec& ZetaVec::operator-=(const ZetaVec& o) {
  check_same_p(p_, o.p_);
  for (int i = 0; i < p_; ++i) c_[i] = checked_add(c_[i], checked_mul(-1, o.c_[i]));
  return *this;
}

ZetaVec& ZetaVec::operator*=(std::int64_t s) {
  for (auto& c : c_) c = checked_mul(c, s);
  return *this;
}

ZetaVec operator*(const ZetaVec& a, const ZetaVec& b) {
  check_same_p(a.p_, b.p_);
  const int p = a.p_;
  ZetaVec out(p);
  for (int i = 0; i < p; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; j < p; ++j) {
      if (b.c_[j] == 0) continue;
      int k = i + j;
      if (k >= p) k -= p;
      out.c_[k] = checked_add(out.c_[k], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  return out;
}

ZetaVec ZetaVec::conj() const {
  ZetaVec out(p_);
  out.c_[0] = c_[0];
  for (int i = 1; i < p_; ++i) out.c_[p_ - i] = c_[i];
  return out;
}

CycNum ZetaVec::to_cycnum() const { return CycNum::from_zeta_counts(c_); }

std::complex<double> ZetaVec::to_complex() const {
  std::complex<double> s = 0;
  for (int i = 0; i < p_; ++i) {
    if (c_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * i / p_;
    s += static_cast<double>(c_[i]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return s;
}

bool operator==(const ZetaVec& a, const ZetaVec& b) {
  if (a.p_ != b.p_) return false;
  // Equal iff a - b is a constant vector. Compare differences pairwise in
  // 128-bit to avoid overflow.
  const __int128 base = static_cast<__int128>(a.c_[0]) - b.c_[0];
  for (int i = 1; i < a.p_; ++i) {
    if (static_cast<__int128>(a.c_[i]) - b.c_[i] != base) return false;
  }
  return true;
}

Integer int_pow(std::int64_t base, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::llabs(base)), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

Rational rat_pow(const Rational& base, int e) {
  Rational r = 1, b = base;
  unsigned u = static_cast<unsigned>(e < 0 ? -e : e);
  while (u) {
    if (u & 1) r *= b;
    u >>= 1;
    if (u) b *= b;
  }
  if (e < 0) {
    if (sgn(r) == 0) fail(Errc::bad_params, "zero to a negative power");
    r = 1 / r;
  }
  r.canonicalize();
  return r;
}

}  // namespace ffres
