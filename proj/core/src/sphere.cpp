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

#include "ffres/sphere.hpp"

#include <cmath>

#include "ffres/characters.hpp"
#include "ffres/error.hpp"
#include "ffres/transform.hpp"

namespace ffres {

SphereTable::SphereTable(VectorSpace space) : space_(std::move(space)) {
  pts_.resize(space_.field().q());
  for (Index v = 0; v < space_.size(); ++v) pts_[space_.norm(v)].push_back(v);
}

std::uint64_t SphereTable::total() const noexcept {
  std::uint64_t s = 0;
  for (const auto& p : pts_) s += p.size();
  return s;
}

SphereTable build_spheres(const Field& field, int d, std::uint64_t cap) {
  return SphereTable(VectorSpace(field, d, cap));
}

std::vector<ZetaVec> sphere_sums(const VectorSpace& space, Index m, Element twist) {
  const Character chi(space.field(), twist);
  const int p = space.field().p();
  const Index am = space.scale(chi.twist(), m);
  std::vector<std::vector<std::int64_t>> counts(space.field().q(), std::vector<std::int64_t>(p, 0));
  for (Index x = 0; x < space.size(); ++x) {
    const int k = space.dot_trace(x, am);
    ++counts[space.norm(x)][k == 0 ? 0 : p - k];
  }
  std::vector<ZetaVec> out;
  out.reserve(counts.size());
  for (const auto& c : counts) {
    ZetaVec z(p);
    for (int k = 0; k < p; ++k) z.add_zeta(k, c[k]);
    out.push_back(std::move(z));
  }
  return out;
}

namespace {

Rational inv_q_power(const VectorSpace& space, int e) {
  return Rational(1, int_pow(space.field().p(), static_cast<unsigned>(space.field().n() * e)));
}

}  // namespace

CycNum sphere_hat_direct(const SphereTable& table, Element t, Index m, Element twist) {
  const VectorSpace& space = table.space();
  const Character chi(space.field(), twist);
  const int p = space.field().p();
  const Index am = space.scale(chi.twist(), m);
  ZetaVec z(p);
  for (auto x : table.points(t)) z.add_zeta(-space.dot_trace(x, am));
  return z.to_cycnum() * inv_q_power(space, space.dim());
}

std::vector<CycNum> sphere_hat_direct_all(const VectorSpace& space, Index m, Element twist) {
  const auto sums = sphere_sums(space, m, twist);
  const Rational s = inv_q_power(space, space.dim());
  std::vector<CycNum> out;
  out.reserve(sums.size());
  for (const auto& z : sums) out.push_back(z.to_cycnum() * s);
  return out;
}

SphereClosedForm::SphereClosedForm(const VectorSpace& space, Element twist)
    : space_(space), chi_(space.field(), twist), gd_(space.field().p()) {
  if (space.dim() % 2 != 0) fail(Errc::odd_dimension, "the Gauss-sum formula needs even d");
  const ZetaVec g = gauss_sum_vec(space.field(), twist);
  gd_.add_zeta(0, 1);
  for (int i = 0; i < space.dim(); ++i) gd_ = gd_ * g;
}

ZetaVec SphereClosedForm::scaled(Element t, Element norm, bool zero_vector) const {
  const Field& f = space_.field();
  const int p = f.p();
  const Element four = f.from_int(4);
  ZetaVec s(p);
  for (Element l = 1; l < f.q(); ++l) {
    const Element arg = f.add(f.mul(t, l), f.mul(norm, f.inv(f.mul(four, l))));
    s.add_zeta(chi_.exponent(arg));
  }
  ZetaVec out = gd_ * s;
  if (zero_vector) {
    std::int64_t qd = 1;
    for (int i = 0; i < space_.dim(); ++i) qd *= f.q();
    out.add_zeta(0, qd);
  }
  return out;
}

CycNum SphereClosedForm::value(Element t, Index m) const {
  return scaled(t, space_.norm(m), m == 0).to_cycnum() * inv_q_power(space_, space_.dim() + 1);
}

CycNum sphere_hat_closed(const VectorSpace& space, Element t, Index m, Element twist) {
  return SphereClosedForm(space, twist).value(t, m);
}

std::pair<ZetaVec, ZetaVec> pair_sum_scaled(const VectorSpace& space, std::span<const ZetaVec> sums_m,
                                            std::span<const ZetaVec> sums_v, Index m, Index v,
                                            Element twist) {
  const Field& f = space.field();
  const Character chi(f, twist);
  const int p = f.p();
  ZetaVec lhs(p);
  for (Element t = 0; t < f.q(); ++t) lhs += sums_m[t] * sums_v[t].conj();
  ZetaVec rhs(p);
  std::int64_t qd = 1;
  for (int i = 0; i < space.dim(); ++i) qd *= f.q();
  if (m == 0 && v == 0) rhs.add_zeta(0, qd * qd / f.q());
  const Element diff = f.sub(space.norm(m), space.norm(v));
  ZetaVec s(p);
  for (Element e = 1; e < f.q(); ++e) s.add_zeta(chi.exponent(f.mul(e, diff)));
  s *= qd / f.q();
  rhs += s;
  return {std::move(lhs), std::move(rhs)};
}

PairSum pair_sum_check(const VectorSpace& space, Index m, Index v, Element twist) {
  const auto sm = sphere_sums(space, m, twist);
  const auto sv = sphere_sums(space, v, twist);
  auto [l, r] = pair_sum_scaled(space, sm, sv, m, v, twist);
  const Rational s = inv_q_power(space, 2 * space.dim());
  return {l.to_cycnum() * s, r.to_cycnum() * s};
}

MaxHat max_nonzero_hat(const SphereTable& table, Element t) {
  if (t == 0) fail(Errc::zero_radius, "the decay bound is stated for t != 0");
  const VectorSpace& space = table.space();
  const auto sh = hat(PointFn::indicator(PointSet(space, {table.points(t).begin(), table.points(t).end()})));
  MaxHat out;
  for (Index n = 1; n < space.size(); ++n) {
    const double a = std::abs(sh.numerators()[n]);
    if (a > out.max) {
      out.max = a;
      out.argmax = n;
    }
  }
  out.ratio = out.max * std::pow(static_cast<double>(space.field().q()), (space.dim() + 1) / 2.0);
  return out;
}

}  // namespace ffres
