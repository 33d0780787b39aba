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

#include "ffres/claims.hpp"

#include <algorithm>
#include <cmath>

#include "ffres/characters.hpp"
#include "ffres/error.hpp"
#include "ffres/transform.hpp"

namespace ffres {

namespace {

Integer to_int(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return r;
}

Integer q_of(const Spectrum& s) { return Integer(static_cast<unsigned long>(s.space.field().q())); }

// P^2 >= base^{2k} q^{dk}
bool product_at_least(const Spectrum& s, unsigned base) {
  const int d = s.space.dim();
  const Integer q = q_of(s);
  Integer qdk;
  mpz_pow_ui(qdk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d * s.k));
  return s.product * s.product >= int_pow(base, static_cast<unsigned>(2 * s.k)) * qdk;
}

Rational q_power(const Spectrum& s, int e) {
  const int p = s.space.field().p();
  const int n = s.space.field().n();
  return e >= 0 ? Rational(int_pow(p, static_cast<unsigned>(n * e)))
                : Rational(1, int_pow(p, static_cast<unsigned>(-n * e)));
}

Integer sum_nu_squares(const NuProfile& nu, bool skip_zero) {
  Integer s = 0;
  for (std::size_t t = skip_zero ? 1 : 0; t < nu.nu.size(); ++t) {
    const Integer v = to_int(nu.nu[t]);
    s += v * v;
  }
  return s;
}

void finish(ClaimReport& r) {
  r.lhs_approx = r.lhs.get_d();
  r.rhs_approx = r.rhs.get_d();
  r.pass = r.relation == Relation::le ? r.lhs <= r.rhs : r.lhs >= r.rhs;
  for (const auto& c : r.subchecks) r.pass = r.pass && c.pass;
}

}  // namespace

Spectrum spectrum(std::span<const PointSet> sets, std::uint64_t cap) {
  if (sets.empty()) fail(Errc::bad_params, "need at least one set");
  Spectrum s{sets.front().space(), static_cast<int>(sets.size()), 0, nu_brute(sets, cap), 0, {}};
  s.product = s.nu.product();
  s.zero_sums = to_int(sum_counts(sets, cap)[0]);
  const VectorSpace& space = s.space;
  const int p = space.field().p();
  std::vector<CycNum> prod(space.size(), CycNum::from_rational(p, 1));
  for (const auto& e : sets) {
    const auto eh = indicator_hat_exact(e);
    for (Index m = 0; m < space.size(); ++m) prod[m] *= eh.numerators()[m];
  }
  s.w.assign(space.field().q(), CycNum(p));
  for (Index m = 0; m < space.size(); ++m) s.w[space.norm(m)] += prod[m];
  return s;
}

bool leq_root_term(const Rational& x, const Rational& c, const Integer& q, int d, int k, const Integer& product) {
  if (sgn(x) <= 0) return true;
  if (sgn(c) <= 0 || sgn(product) == 0) return false;
  const auto e = static_cast<unsigned long>(2 * k);
  Rational lhs, rhs;
  mpz_class xn, xd, cn, cd, qdk, p2;
  mpz_pow_ui(xn.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(xd.get_mpz_t(), x.get_den_mpz_t(), e);
  mpz_pow_ui(cn.get_mpz_t(), c.get_num_mpz_t(), e);
  mpz_pow_ui(cd.get_mpz_t(), c.get_den_mpz_t(), e);
  mpz_pow_ui(qdk.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(d * k));
  mpz_pow_ui(p2.get_mpz_t(), product.get_mpz_t(), static_cast<unsigned long>(2 * k - 2));
  // x^{2k} <= c^{2k} q^{dk} P^{2k-2}
  return xn * cd <= cn * qdk * p2 * xd;
}

ClaimReport claim1_check(const Spectrum& s) {
  ClaimReport r;
  r.claim = 1;
  r.relation = Relation::ge;
  const int d = s.space.dim();
  r.hypothesis = d % 2 == 0 && product_at_least(s, 3);
  const Integer nu0 = to_int(s.nu.nu[0]);
  const Integer gap = s.product - nu0;
  r.lhs = Rational(gap * gap);
  r.rhs = Rational(s.product * s.product, 9);
  r.rhs.canonicalize();
  if (d % 2 == 0) {
    Rational x = Rational(nu0) - Rational(s.product) / Rational(q_of(s));
    r.subchecks.push_back({"nu0_upper", leq_root_term(x, 1, q_of(s), d, s.k, s.product)});
  }
  finish(r);
  return r;
}

ClaimReport claim2_check(const Spectrum& s) {
  ClaimReport r;
  r.claim = 2;
  r.hypothesis = true;
  const int d = s.space.dim();
  CycNum energy(s.space.field().p());
  for (const auto& w : s.w) energy += w * w.conj();
  const auto e = energy.as_rational();
  if (!e) fail(Errc::internal, "norm-class energy is not rational");
  const Rational spectral = *e * q_power(s, -d);
  const Rational pq = Rational(s.product * s.product) / Rational(q_of(s));
  r.lhs = Rational(sum_nu_squares(s.nu, false));
  r.rhs = pq + spectral;
  r.rhs.canonicalize();
  Rational ident = r.rhs - q_power(s, d - 1) * Rational(s.zero_sums * s.zero_sums);
  ident.canonicalize();
  r.subchecks.push_back({"identity", ident == r.lhs});
  finish(r);
  return r;
}

ClaimReport claim3_check(const Spectrum& s) {
  ClaimReport r;
  r.claim = 3;
  const int d = s.space.dim();
  r.hypothesis = d % 2 == 0 && product_at_least(s, 1);
  const Integer nu0 = to_int(s.nu.nu[0]);
  const CycNum w0 = s.w[0];
  const CycNum b_energy = w0 * w0.conj() * q_power(s, -d);
  const auto be = b_energy.as_rational();
  r.rhs = Rational(4 * s.product * s.product) / Rational(q_of(s));
  r.rhs.canonicalize();
  if (!be) {
    r.exact = false;
    r.lhs_approx = b_energy.to_complex().real() - nu0.get_d() * nu0.get_d();
    r.rhs_approx = r.rhs.get_d();
    r.pass = r.lhs_approx <= r.rhs_approx * (1 + 1e-12);
    return r;
  }
  r.lhs = *be - Rational(nu0 * nu0);
  if (d % 2 == 0) {
    const CycNum gd = gauss_sum(s.space.field()).pow(static_cast<unsigned>(d));
    const Rational g = *gd.as_rational();
    const Rational qq(q_of(s));
    const Rational a = Rational(s.product) / qq - g * Rational(s.zero_sums) / qq;
    const auto b = (gd * w0.conj() * q_power(s, -d)).as_rational();
    r.subchecks.push_back({"split", b && a + *b == Rational(nu0)});
    if (b) {
      r.subchecks.push_back({"cross_term", r.lhs <= -2 * a * *b});
      r.subchecks.push_back({"a_bound", leq_root_term(abs(a) - Rational(s.product) / qq, 1 / qq, q_of(s), d, s.k,
                                                      s.product)});
      r.subchecks.push_back({"b_bound", leq_root_term(abs(*b), 1, q_of(s), d, s.k, s.product)});
    }
  }
  finish(r);
  return r;
}

ClaimReport claim1_check(std::span<const PointSet> sets) { return claim1_check(spectrum(sets)); }
ClaimReport claim2_check(std::span<const PointSet> sets) { return claim2_check(spectrum(sets)); }
ClaimReport claim3_check(std::span<const PointSet> sets) { return claim3_check(spectrum(sets)); }

Theorem31Report theorem31_chain(std::span<const PointSet> sets, std::uint64_t cap) {
  Theorem31Report r;
  const NuProfile nu = nu_brute(sets, cap);
  const VectorSpace& space = sets.front().space();
  const Element q = space.field().q();
  const int d = space.dim();
  const int k = static_cast<int>(sets.size());
  const Integer product = nu.product();
  r.delta_size = delta_set(nu).size();
  const Integer gap = product - to_int(nu.nu[0]);
  r.numerator = gap * gap;
  r.denominator = sum_nu_squares(nu, true);
  r.cauchy_schwarz = Integer(static_cast<unsigned long>(r.delta_size)) * r.denominator >= r.numerator;

  Integer qdk;
  mpz_ui_pow_ui(qdk.get_mpz_t(), q, static_cast<unsigned long>(d * k));
  r.hypothesis = d % 2 == 0 && product * product >= int_pow(9, static_cast<unsigned>(k)) * qdk;

  std::vector<double> moment(q, 1.0);
  for (const auto& e : sets) {
    const auto eh = hat(PointFn::indicator(e));
    std::vector<double> acc(q, 0.0);
    for (Index m = 0; m < space.size(); ++m) acc[space.norm(m)] += std::pow(std::abs(eh.at(m)), k);
    for (Element t = 1; t < q; ++t) moment[t] *= std::pow(acc[t], 1.0 / k);
  }
  r.sphere_moment = q > 1 ? *std::max_element(moment.begin() + 1, moment.end()) : 0.0;
  const double pk = std::pow(product.get_d(), (k + 1.0) / k);
  const double denom = qdk.get_d() * r.sphere_moment;
  r.bound = denom > 0 ? std::min<double>(q, pk / denom) : static_cast<double>(q);
  r.ratio = r.bound > 0 ? static_cast<double>(r.delta_size) / r.bound : 0.0;
  return r;
}

}  // namespace ffres
