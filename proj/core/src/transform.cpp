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

#include "ffres/transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "ffres/error.hpp"

namespace ffres {

namespace {

std::vector<Complex> roots_of_unity(int p) {
  std::vector<Complex> r(p);
  for (int k = 0; k < p; ++k) {
    const double a = 2.0 * std::numbers::pi * k / p;
    r[k] = Complex(std::cos(a), std::sin(a));
  }
  return r;
}

int signed_exp(int sign, int k, int p) {
  const int e = sign > 0 ? k : p - k;
  return e == p ? 0 : e;
}

std::vector<Index> twisted(const VectorSpace& space, Element twist) {
  const Character chi(space.field(), twist);
  std::vector<Index> am(space.size());
  for (Index m = 0; m < space.size(); ++m) am[m] = space.scale(chi.twist(), m);
  return am;
}

void naive_float(const VectorSpace& space, std::span<const Complex> in, std::span<Complex> out, int sign,
                 Element twist) {
  const int p = space.field().p();
  const auto roots = roots_of_unity(p);
  const auto am = twisted(space, twist);
  for (Index m = 0; m < space.size(); ++m) {
    Complex acc = 0;
    for (Index x = 0; x < space.size(); ++x) {
      acc += in[x] * roots[signed_exp(sign, space.dot_trace(x, am[m]), p)];
    }
    out[m] = acc;
  }
}

void axis_float(const VectorSpace& space, std::span<const Complex> in, std::span<Complex> out, int sign,
                Element twist) {
  const Field& f = space.field();
  const Character chi(f, twist);
  const int p = f.p();
  const Element q = f.q();
  const auto roots = roots_of_unity(p);
  std::vector<Complex> w(static_cast<std::size_t>(q) * q);
  for (Element x = 0; x < q; ++x) {
    for (Element m = 0; m < q; ++m) {
      w[x * q + m] = roots[signed_exp(sign, space.trace_mul(x, f.mul(chi.twist(), m)), p)];
    }
  }
  std::copy(in.begin(), in.end(), out.begin());
  std::vector<Complex> line(q), res(q);
  const Index n = space.size();
  for (int axis = 0; axis < space.dim(); ++axis) {
    const Index s = space.stride(axis);
    const Index block = s * q;
    for (Index outer = 0; outer < n; outer += block) {
      for (Index inner = 0; inner < s; ++inner) {
        const Index base = outer + inner;
        for (Element x = 0; x < q; ++x) line[x] = out[base + x * s];
        for (Element m = 0; m < q; ++m) res[m] = 0;
        for (Element x = 0; x < q; ++x) {
          const Complex v = line[x];
          if (v == Complex(0)) continue;
          const Complex* row = &w[x * q];
          for (Element m = 0; m < q; ++m) res[m] += v * row[m];
        }
        for (Element m = 0; m < q; ++m) out[base + m * s] = res[m];
      }
    }
  }
}

std::optional<std::vector<std::int64_t>> integer_weights(std::span<const CycNum> in) {
  std::vector<std::int64_t> w(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    auto r = in[i].as_rational();
    if (!r || r->get_den() != 1 || !r->get_num().fits_slong_p()) return std::nullopt;
    w[i] = r->get_num().get_si();
  }
  return w;
}

std::vector<CycNum> exact_transform(const VectorSpace& space, std::span<const CycNum> in, int sign,
                                    Element twist) {
  const int p = space.field().p();
  const auto am = twisted(space, twist);
  std::vector<CycNum> out;
  out.reserve(space.size());
  if (auto w = integer_weights(in)) {
    std::vector<Index> support;
    for (Index x = 0; x < space.size(); ++x) {
      if ((*w)[x] != 0) support.push_back(x);
    }
    for (Index m = 0; m < space.size(); ++m) {
      ZetaVec acc(p);
      for (auto x : support) acc.add_zeta(signed_exp(sign, space.dot_trace(x, am[m]), p), (*w)[x]);
      out.push_back(acc.to_cycnum());
    }
    return out;
  }
  std::vector<Index> support;
  for (Index x = 0; x < space.size(); ++x) {
    if (!in[x].is_zero()) support.push_back(x);
  }
  CycAccumulator acc(p);
  for (Index m = 0; m < space.size(); ++m) {
    acc.clear();
    for (auto x : support) acc.add(in[x], signed_exp(sign, space.dot_trace(x, am[m]), p));
    out.push_back(acc.value());
  }
  return out;
}

int field_power(const VectorSpace& space) { return space.field().n() * space.dim(); }

std::vector<Complex> scaled(const auto& g) { return g.values(); }

}  // namespace

void character_transform(const VectorSpace& space, std::span<const Complex> in, std::span<Complex> out,
                         int sign, Element twist, Kernel kernel) {
  if (in.size() != space.size() || out.size() != space.size()) {
    fail(Errc::dimension_mismatch, "transform buffers must have q^d entries");
  }
  if (kernel == Kernel::axis) {
    axis_float(space, in, out, sign, twist);
  } else {
    naive_float(space, in, out, sign, twist);
  }
}

namespace {

template <Side To>
FloatGrid<To> float_transform(const VectorSpace& space, const std::vector<Complex>& in, int sign,
                              Element twist, Kernel kernel, double scale) {
  std::vector<Complex> out(space.size());
  character_transform(space, in, out, sign, twist, kernel);
  if (scale != 1.0) {
    for (auto& v : out) v *= scale;
  }
  return FloatGrid<To>(space, std::move(out));
}

}  // namespace

DualFn hat(const PointFn& f, Kernel kernel, Element twist) {
  const double s = 1.0 / static_cast<double>(f.space().size());
  return float_transform<Side::dual>(f.space(), scaled(f), -1, twist, kernel, s);
}

ExactDualFn hat(const ExactPointFn& f, Element twist) {
  return ExactDualFn(f.space(), exact_transform(f.space(), f.numerators(), -1, twist),
                     f.denom_power() + field_power(f.space()));
}

PointFn tilde(const DualFn& g, Kernel kernel, Element twist) {
  return float_transform<Side::point>(g.space(), scaled(g), -1, twist, kernel, 1.0);
}

ExactPointFn tilde(const ExactDualFn& g, Element twist) {
  return ExactPointFn(g.space(), exact_transform(g.space(), g.numerators(), -1, twist), g.denom_power());
}

PointFn inverse(const DualFn& fh, Kernel kernel, Element twist) {
  return float_transform<Side::point>(fh.space(), scaled(fh), +1, twist, kernel, 1.0);
}

ExactPointFn inverse(const ExactDualFn& fh, Element twist) {
  return ExactPointFn(fh.space(), exact_transform(fh.space(), fh.numerators(), +1, twist), fh.denom_power());
}

template <Side S>
FloatGrid<flip(S)> fast_axis_transform(const FloatGrid<S>& f, Element twist) {
  if constexpr (S == Side::point) {
    return hat(f, Kernel::axis, twist);
  } else {
    return tilde(f, Kernel::axis, twist);
  }
}

template <Side S>
ExactGrid<flip(S)> fast_axis_transform(const ExactGrid<S>&, Element) {
  fail(Errc::exact_mode_unsupported, "the axis-factorized kernel is float only");
}

template <Side S>
FloatGrid<flip(S)> naive_transform(const FloatGrid<S>& f, Element twist) {
  if constexpr (S == Side::point) {
    return hat(f, Kernel::naive, twist);
  } else {
    return tilde(f, Kernel::naive, twist);
  }
}

template FloatGrid<Side::dual> fast_axis_transform(const FloatGrid<Side::point>&, Element);
template FloatGrid<Side::point> fast_axis_transform(const FloatGrid<Side::dual>&, Element);
template ExactGrid<Side::dual> fast_axis_transform(const ExactGrid<Side::point>&, Element);
template ExactGrid<Side::point> fast_axis_transform(const ExactGrid<Side::dual>&, Element);
template FloatGrid<Side::dual> naive_transform(const FloatGrid<Side::point>&, Element);
template FloatGrid<Side::point> naive_transform(const FloatGrid<Side::dual>&, Element);

ExactDualFn indicator_hat_exact(const PointSet& set, Element twist) {
  const VectorSpace& space = set.space();
  const int p = space.field().p();
  const auto am = twisted(space, twist);
  std::vector<CycNum> out;
  out.reserve(space.size());
  std::vector<std::int64_t> counts(p);
  for (Index m = 0; m < space.size(); ++m) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto x : set.indices()) ++counts[signed_exp(-1, space.dot_trace(x, am[m]), p)];
    out.push_back(CycNum::from_zeta_counts(counts));
  }
  return ExactDualFn(space, std::move(out), field_power(space));
}

double plancherel_defect(const PointFn& f) {
  const auto fh = hat(f);
  double lhs = 0, rhs = 0;
  for (const auto& v : fh.numerators()) lhs += std::norm(v);
  for (const auto& v : f.values()) rhs += std::norm(v);
  rhs /= static_cast<double>(f.space().size());
  return std::abs(lhs - rhs);
}

double plancherel_defect(const ExactPointFn& f) {
  const int p = f.space().field().p();
  const auto fh = hat(f);
  CycNum lhs(p), rhs(p);
  for (const auto& v : fh.numerators()) lhs += v * v.conj();
  for (const auto& v : f.numerators()) rhs += v * v.conj();
  // lhs over p^{2(e+nd)}, rhs over p^{2e+nd}
  const unsigned nd = static_cast<unsigned>(field_power(f.space()));
  rhs *= Rational(int_pow(p, nd));
  if (lhs == rhs) return 0.0;
  const double scale = std::pow(static_cast<double>(p), -2.0 * fh.denom_power());
  return std::abs((lhs - rhs).to_complex()) * scale;
}

PointFn convolve(const PointFn& f, const PointFn& g) {
  if (!(f.space() == g.space())) fail(Errc::dimension_mismatch, "convolution of grids on different spaces");
  const auto fh = hat(f), gh = hat(g);
  std::vector<Complex> prod(f.size());
  const double n = static_cast<double>(f.space().size());
  for (Index m = 0; m < prod.size(); ++m) prod[m] = fh.numerators()[m] * gh.numerators()[m] * n;
  return inverse(DualFn(f.space(), std::move(prod)));
}

ExactPointFn convolve(const ExactPointFn& f, const ExactPointFn& g) {
  if (!(f.space() == g.space())) fail(Errc::dimension_mismatch, "convolution of grids on different spaces");
  const auto fh = hat(f), gh = hat(g);
  std::vector<CycNum> prod;
  prod.reserve(f.size());
  for (Index m = 0; m < f.size(); ++m) prod.push_back(fh.numerators()[m] * gh.numerators()[m]);
  const int denom = fh.denom_power() + gh.denom_power() - field_power(f.space());
  return inverse(ExactDualFn(f.space(), std::move(prod), denom));
}

template <Side S>
HolderSides gen_holder_check(std::span<const FloatGrid<S>> fns, std::span<const Rational> exponents,
                             std::span<const Index> domain) {
  if (fns.empty() || fns.size() != exponents.size()) {
    fail(Errc::bad_exponents, "need one exponent per function");
  }
  Rational total = 0;
  for (const auto& e : exponents) {
    if (sgn(e) <= 0) fail(Errc::bad_exponents, "exponents must be positive");
    total += 1 / e;
  }
  if (total != 1) fail(Errc::bad_exponents, "reciprocal exponents sum to " + total.get_str());
  for (const auto& f : fns) {
    if (!(f.space() == fns.front().space())) fail(Errc::dimension_mismatch, "functions on different spaces");
  }
  std::vector<Index> dom(domain.begin(), domain.end());
  if (dom.empty()) {
    dom.resize(fns.front().size());
    for (Index i = 0; i < dom.size(); ++i) dom[i] = i;
  }
  std::vector<std::vector<Complex>> vals;
  for (const auto& f : fns) vals.push_back(f.values());
  HolderSides out;
  for (auto x : dom) {
    double prod = 1;
    for (const auto& v : vals) prod *= std::abs(v[x]);
    out.lhs += prod;
  }
  out.rhs = 1;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const double pe = exponents[i].get_d();
    double s = 0;
    for (auto x : dom) s += std::pow(std::abs(vals[i][x]), pe);
    out.rhs *= std::pow(s, 1.0 / pe);
  }
  return out;
}

template HolderSides gen_holder_check(std::span<const FloatGrid<Side::point>>, std::span<const Rational>,
                                      std::span<const Index>);
template HolderSides gen_holder_check(std::span<const FloatGrid<Side::dual>>, std::span<const Rational>,
                                      std::span<const Index>);

HolderSides lemma21_check(std::span<const PointSet> sets) {
  if (sets.size() < 2) fail(Errc::bad_params, "need at least two sets");
  require_common_space(sets);
  const VectorSpace& space = sets.front().space();
  const double k = static_cast<double>(sets.size());
  const double n = static_cast<double>(space.size());
  std::vector<double> prod(space.size(), 1.0);
  double sizes = 1;
  for (const auto& e : sets) {
    const auto eh = hat(PointFn::indicator(e));
    for (Index m = 0; m < space.size(); ++m) prod[m] *= std::abs(eh.numerators()[m]);
    sizes *= static_cast<double>(e.size());
  }
  HolderSides out;
  for (auto v : prod) out.lhs += v;
  out.rhs = std::pow(n, 1.0 - k) * std::pow(sizes, (k - 1) / k);
  return out;
}

}  // namespace ffres
