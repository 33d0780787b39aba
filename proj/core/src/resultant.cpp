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

#include "ffres/resultant.hpp"

#include <cmath>
#include <string>

#include "ffres/error.hpp"
#include "ffres/sphere.hpp"
#include "ffres/transform.hpp"

namespace ffres {

Integer NuProfile::product() const {
  Integer p = 1;
  for (auto s : sizes) p *= static_cast<unsigned long>(s);
  return p;
}

Integer NuProfile::mass() const {
  Integer m = 0;
  for (auto v : nu) m += static_cast<unsigned long>(v);
  return m;
}

namespace {

void check_sets(std::span<const PointSet> sets) {
  if (sets.empty()) fail(Errc::bad_params, "need at least one set");
  require_common_space(sets);
}

NuProfile make_profile(std::span<const PointSet> sets) {
  NuProfile out;
  out.k = static_cast<int>(sets.size());
  for (const auto& s : sets) out.sizes.push_back(s.size());
  out.nu.assign(sets.front().space().field().q(), 0);
  if (out.product() >= Integer("9223372036854775807")) fail(Errc::too_large, "tuple count exceeds 2^63");
  return out;
}

}  // namespace

std::vector<std::uint64_t> sum_counts(std::span<const PointSet> sets, std::uint64_t cap) {
  check_sets(sets);
  const VectorSpace& space = sets.front().space();
  std::uint64_t cost = 0;
  for (const auto& s : sets) cost += static_cast<std::uint64_t>(space.size()) * s.size();
  if (cost > cap) fail(Errc::too_large, "convolution cost " + std::to_string(cost) + " exceeds cap");
  std::vector<std::uint64_t> c(space.size(), 0);
  for (auto x : sets.front().indices()) c[x] = 1;
  std::vector<std::uint64_t> next(space.size());
  for (std::size_t j = 1; j < sets.size(); ++j) {
    std::fill(next.begin(), next.end(), 0);
    for (Index s = 0; s < space.size(); ++s) {
      if (c[s] == 0) continue;
      for (auto a : sets[j].indices()) next[space.add(s, a)] += c[s];
    }
    c.swap(next);
  }
  return c;
}

NuProfile nu_brute(std::span<const PointSet> sets, std::uint64_t cap) {
  NuProfile out = make_profile(sets);
  const auto c = sum_counts(sets, cap);
  const VectorSpace& space = sets.front().space();
  for (Index s = 0; s < space.size(); ++s) out.nu[space.norm(s)] += c[s];
  return out;
}

NuProfile nu_enumerate(std::span<const PointSet> sets) {
  NuProfile out = make_profile(sets);
  if (out.product() > 1'000'000) fail(Errc::too_large, "direct enumeration is limited to 10^6 tuples");
  const VectorSpace& space = sets.front().space();
  for (const auto& s : sets) {
    if (s.empty()) return out;
  }
  std::vector<std::size_t> pos(sets.size(), 0);
  while (true) {
    Index sum = sets[0].indices()[pos[0]];
    for (std::size_t j = 1; j < sets.size(); ++j) sum = space.add(sum, sets[j].indices()[pos[j]]);
    ++out.nu[space.norm(sum)];
    std::size_t j = 0;
    while (j < sets.size() && ++pos[j] == sets[j].size()) pos[j++] = 0;
    if (j == sets.size()) break;
  }
  return out;
}

namespace {

// Representative of each class: index q for m = 0, index r for the first
// nonzero m with ||m|| = r (absent classes keep the sentinel).
std::vector<Index> class_reps(const VectorSpace& space) {
  const Element q = space.field().q();
  std::vector<Index> reps(q + 1, space.size());
  reps[q] = 0;
  for (Index m = 1; m < space.size(); ++m) {
    if (reps[space.norm(m)] == space.size()) reps[space.norm(m)] = m;
  }
  return reps;
}

NuProfile nu_fourier_exact(std::span<const PointSet> sets, Element twist) {
  NuProfile out = make_profile(sets);
  const VectorSpace& space = sets.front().space();
  const Element q = space.field().q();
  const int p = space.field().p();
  std::vector<CycNum> prod(space.size(), CycNum::from_rational(p, 1));
  for (const auto& e : sets) {
    const auto eh = indicator_hat_exact(e, twist);
    for (Index m = 0; m < space.size(); ++m) prod[m] *= eh.numerators()[m].conj();
  }
  std::vector<CycNum> w(q + 1, CycNum(p));
  for (Index m = 0; m < space.size(); ++m) w[m == 0 ? q : space.norm(m)] += prod[m];
  const auto reps = class_reps(space);
  // numerators: E^ over q^d each, S^ over q^d; q^{dk} cancels the first.
  std::vector<CycNum> acc(q, CycNum(p));
  for (Element c = 0; c <= q; ++c) {
    if (reps[c] == space.size()) continue;
    const auto sums = sphere_sums(space, reps[c], twist);
    for (Element t = 0; t < q; ++t) acc[t] += sums[t].to_cycnum() * w[c];
  }
  const Rational scale(1, int_pow(p, static_cast<unsigned>(space.field().n() * space.dim())));
  for (Element t = 0; t < q; ++t) {
    const auto v = (acc[t] * scale).as_rational();
    if (!v || v->get_den() != 1 || sgn(*v) < 0 || !v->get_num().fits_ulong_p()) {
      fail(Errc::internal, "Fourier count is not a nonnegative integer at t=" + std::to_string(t));
    }
    out.nu[t] = v->get_num().get_ui();
  }
  return out;
}

NuProfile nu_fourier_float(std::span<const PointSet> sets, Element twist) {
  NuProfile out = make_profile(sets);
  const VectorSpace& space = sets.front().space();
  const Element q = space.field().q();
  std::vector<Complex> prod(space.size(), 1.0);
  for (const auto& e : sets) {
    const auto eh = hat(PointFn::indicator(e), Kernel::axis, twist);
    for (Index m = 0; m < space.size(); ++m) prod[m] *= std::conj(eh.at(m));
  }
  std::vector<Complex> w(q + 1, 0.0);
  for (Index m = 0; m < space.size(); ++m) w[m == 0 ? q : space.norm(m)] += prod[m];
  const auto reps = class_reps(space);
  const double n = static_cast<double>(space.size());
  const double qdk = std::pow(n, static_cast<double>(sets.size()));
  std::vector<Complex> acc(q, 0.0);
  for (Element c = 0; c <= q; ++c) {
    if (reps[c] == space.size()) continue;
    const auto sums = sphere_sums(space, reps[c], twist);
    for (Element t = 0; t < q; ++t) acc[t] += sums[t].to_complex() / n * w[c];
  }
  out.approx.resize(q);
  for (Element t = 0; t < q; ++t) {
    const double v = acc[t].real() * qdk;
    out.approx[t] = v;
    out.nu[t] = v < 0.5 ? 0 : static_cast<std::uint64_t>(std::llround(v));
  }
  return out;
}

}  // namespace

NuProfile nu_fourier(std::span<const PointSet> sets, Mode mode, Element twist) {
  check_sets(sets);
  return mode == Mode::exact ? nu_fourier_exact(sets, twist) : nu_fourier_float(sets, twist);
}

std::vector<Element> delta_set(const NuProfile& nu) {
  std::vector<Element> out;
  for (Element t = 0; t < nu.nu.size(); ++t) {
    if (nu.nu[t] > 0) out.push_back(t);
  }
  return out;
}

std::vector<Element> delta_set(std::span<const PointSet> sets) { return delta_set(nu_brute(sets)); }

}  // namespace ffres
