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

#include "ffres/field.hpp"

#include <algorithm>
#include <string>

#include "ffres/error.hpp"

namespace ffres {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<int>;  // coefficients low to high

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool divides(const Poly& g, const Poly& f, int p) { return poly_mod(f, g, p).empty(); }

Poly monic_from_code(std::uint64_t code, int degree, int p) {
  Poly f(degree + 1, 0);
  for (int i = 0; i < degree; ++i) {
    f[i] = static_cast<int>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

bool irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int deg = 1; deg <= n / 2; ++deg) {
    std::uint64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      if (divides(monic_from_code(code, deg, p), f, p)) return false;
    }
  }
  return true;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(c), m, p);
}

Poly to_poly(Element e, int n, int p) {
  Poly a(n, 0);
  for (int i = 0; i < n; ++i) {
    a[i] = static_cast<int>(e % p);
    e /= p;
  }
  trim(a);
  return a;
}

Element from_poly(const Poly& a, int p) {
  Element e = 0;
  for (std::size_t i = a.size(); i-- > 0;) e = e * p + a[i];
  return e;
}

Poly poly_pow(Poly base, std::uint64_t e, const Poly& m, int p) {
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

struct Field::Tables {
  int p = 0;
  int n = 0;
  Element q = 0;
  Poly modulus;
  Element generator = 0;
  std::vector<Element> exp;  // exp[i] = g^i for i in [0, 2(q-1))
  std::vector<std::uint32_t> log;
  std::vector<int> trace_wide;
  std::vector<std::int8_t> eta;
  std::vector<Element> add_tab;  // q*q when q <= 1024 and n > 1
  std::vector<Element> neg;

  Element add_digits(Element a, Element b) const {
    Element r = 0, place = 1;
    for (int i = 0; i < n; ++i) {
      const Element s = (a % p + b % p) % p;
      r += s * place;
      place *= p;
      a /= p;
      b /= p;
    }
    return r;
  }
};

Field Field::make(std::uint64_t p, int n, std::uint64_t cap) {
  if (p == 2) fail(Errc::even_characteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) fail(Errc::non_prime, std::to_string(p) + " is not prime");
  if (n < 1) fail(Errc::bad_params, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > cap) {
      fail(Errc::too_large, "field order exceeds cap " + std::to_string(cap));
    }
  }

  auto t = std::make_shared<Tables>();
  t->p = static_cast<int>(p);
  t->n = n;
  t->q = static_cast<Element>(q);
  const int pi = t->p;

  if (n == 1) {
    t->modulus = {0, 1};
  } else {
    std::uint64_t count = q;  // p^n candidates for the low coefficients
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly f = monic_from_code(code, n, pi);
      if (irreducible(f, pi)) {
        t->modulus = std::move(f);
        break;
      }
    }
  }

  // Primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
  const auto factors = prime_factors(q - 1);
  for (Element g = 1; g < q; ++g) {
    const Poly gp = to_poly(g, n, pi);
    bool primitive = true;
    for (auto r : factors) {
      if (poly_pow(gp, (q - 1) / r, t->modulus, pi) == Poly{1}) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      t->generator = g;
      break;
    }
  }

  t->exp.resize(2 * (q - 1));
  t->log.assign(q, 0);
  {
    const Poly gp = to_poly(t->generator, n, pi);
    Poly cur{1};
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      const Element e = from_poly(cur, pi);
      t->exp[i] = e;
      t->exp[i + q - 1] = e;
      t->log[e] = static_cast<std::uint32_t>(i);
      cur = poly_mulmod(cur, gp, t->modulus, pi);
    }
  }

  t->neg.resize(q);
  for (Element a = 0; a < q; ++a) {
    Element r = 0, place = 1, x = a;
    for (int i = 0; i < n; ++i) {
      r += ((pi - static_cast<int>(x % pi)) % pi) * place;
      place *= pi;
      x /= pi;
    }
    t->neg[a] = r;
  }

  if (n > 1 && q <= 1024) {
    t->add_tab.resize(static_cast<std::size_t>(q) * q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) t->add_tab[a * q + b] = t->add_digits(a, b);
    }
  }

  Field f(t);
  auto* tw = t.get();
  tw->trace_wide.resize(q);
  for (Element a = 0; a < q; ++a) {
    Element s = 0, cur = a;
    for (int i = 0; i < n; ++i) {
      s = f.add(s, cur);
      cur = f.pow(cur, p);
    }
    if (s >= p) fail(Errc::internal, "trace left the prime field");
    tw->trace_wide[a] = static_cast<int>(s);
  }
  tw->eta.resize(q);
  tw->eta[0] = 0;
  for (Element a = 1; a < q; ++a) tw->eta[a] = (t->log[a] % 2 == 0) ? 1 : -1;
  return f;
}

int Field::p() const noexcept { return t_->p; }
int Field::n() const noexcept { return t_->n; }
Element Field::q() const noexcept { return t_->q; }
std::span<const int> Field::modulus() const noexcept { return t_->modulus; }

Element Field::add(Element a, Element b) const noexcept {
  if (t_->n == 1) {
    const Element s = a + b;
    return s >= t_->q ? s - t_->q : s;
  }
  if (!t_->add_tab.empty()) return t_->add_tab[a * t_->q + b];
  return t_->add_digits(a, b);
}

Element Field::neg(Element a) const noexcept { return t_->neg[a]; }
Element Field::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element Field::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Element Field::inv(Element a) const {
  if (a == 0) fail(Errc::bad_params, "inverse of zero");
  const auto l = t_->log[a];
  return l == 0 ? 1 : t_->exp[(t_->q - 1) - l];
}

Element Field::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(t_->log[a]) * (e % (t_->q - 1))) % (t_->q - 1);
  return t_->exp[l];
}

int Field::trace(Element a) const noexcept { return t_->trace_wide[a]; }
int Field::quad_char(Element a) const noexcept { return t_->eta[a]; }

std::optional<Element> Field::sqrt(Element a) const {
  for (Element r = 0; r < t_->q; ++r) {
    if (mul(r, r) == a) return r;
  }
  return std::nullopt;
}

Element Field::generator() const noexcept { return t_->generator; }

Element Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = t_->p;
  return static_cast<Element>(((v % p) + p) % p);
}

std::vector<int> Field::digits(Element a) const {
  std::vector<int> d(t_->n);
  for (int i = 0; i < t_->n; ++i) {
    d[i] = static_cast<int>(a % t_->p);
    a /= t_->p;
  }
  return d;
}

Element Field::from_digits(std::span<const int> digits) const {
  if (static_cast<int>(digits.size()) != t_->n) {
    fail(Errc::bad_params, "expected " + std::to_string(t_->n) + " digits");
  }
  Element e = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= t_->p) fail(Errc::bad_params, "digit out of range");
    e = e * t_->p + static_cast<Element>(digits[i]);
  }
  return e;
}

Character::Character(Field field, Element twist) : field_(std::move(field)), twist_(twist) {
  if (twist_ == 0 || twist_ >= field_.q()) fail(Errc::bad_params, "character twist must be a nonzero field element");
}

// ---------------------------------------------------------------------------

struct VectorSpace::Impl {
  Field field;
  int d = 0;
  Index size = 0;
  std::vector<Index> strides;
  std::vector<Element> coords;  // size * d
  std::vector<Element> norms;
  std::vector<std::uint16_t> trmul;  // q*q when q <= 1024

  explicit Impl(Field f) : field(std::move(f)) {}
};

VectorSpace::VectorSpace(Field field, int dim, std::uint64_t cap) {
  if (dim < 1) fail(Errc::bad_params, "dimension must be >= 1");
  std::uint64_t n = 1;
  for (int i = 0; i < dim; ++i) {
    n *= field.q();
    if (n > cap) fail(Errc::too_large, "q^d exceeds grid cap " + std::to_string(cap));
  }
  auto impl = std::make_shared<Impl>(std::move(field));
  const Field& f = impl->field;
  const Element q = f.q();
  impl->d = dim;
  impl->size = static_cast<Index>(n);
  impl->strides.resize(dim);
  Index s = 1;
  for (int axis = dim - 1; axis >= 0; --axis) {
    impl->strides[axis] = s;
    s *= q;
  }
  impl->coords.resize(static_cast<std::size_t>(n) * dim);
  impl->norms.resize(n);
  for (Index v = 0; v < n; ++v) {
    Index rest = v;
    Element nrm = 0;
    for (int axis = dim - 1; axis >= 0; --axis) {
      const Element c = rest % q;
      rest /= q;
      impl->coords[static_cast<std::size_t>(v) * dim + axis] = c;
      nrm = f.add(nrm, f.mul(c, c));
    }
    impl->norms[v] = nrm;
  }
  if (q <= 1024) {
    impl->trmul.resize(static_cast<std::size_t>(q) * q);
    for (Element a = 0; a < q; ++a) {
      for (Element b = 0; b < q; ++b) {
        impl->trmul[a * q + b] = static_cast<std::uint16_t>(f.trace(f.mul(a, b)));
      }
    }
  }
  impl_ = std::move(impl);
}

const Field& VectorSpace::field() const noexcept { return impl_->field; }
int VectorSpace::dim() const noexcept { return impl_->d; }
Index VectorSpace::size() const noexcept { return impl_->size; }
Index VectorSpace::stride(int axis) const noexcept { return impl_->strides[axis]; }

Element VectorSpace::coord(Index v, int axis) const noexcept {
  return impl_->coords[static_cast<std::size_t>(v) * impl_->d + axis];
}

std::span<const Element> VectorSpace::coords(Index v) const noexcept {
  return {impl_->coords.data() + static_cast<std::size_t>(v) * impl_->d,
          static_cast<std::size_t>(impl_->d)};
}

Index VectorSpace::encode(std::span<const Element> x) const {
  if (static_cast<int>(x.size()) != impl_->d) fail(Errc::dimension_mismatch, "coordinate count differs from dimension");
  const Element q = impl_->field.q();
  Index v = 0;
  for (auto c : x) {
    if (c >= q) fail(Errc::bad_params, "coordinate is not a field element");
    v = v * q + c;
  }
  return v;
}

Index VectorSpace::add(Index a, Index b) const noexcept {
  const auto ca = coords(a), cb = coords(b);
  const Field& f = impl_->field;
  Index v = 0;
  for (int i = 0; i < impl_->d; ++i) v = v * f.q() + f.add(ca[i], cb[i]);
  return v;
}

Index VectorSpace::neg(Index a) const noexcept {
  const auto ca = coords(a);
  const Field& f = impl_->field;
  Index v = 0;
  for (int i = 0; i < impl_->d; ++i) v = v * f.q() + f.neg(ca[i]);
  return v;
}

Index VectorSpace::sub(Index a, Index b) const noexcept { return add(a, neg(b)); }

Index VectorSpace::scale(Element c, Index a) const noexcept {
  const auto ca = coords(a);
  const Field& f = impl_->field;
  Index v = 0;
  for (int i = 0; i < impl_->d; ++i) v = v * f.q() + f.mul(c, ca[i]);
  return v;
}

Element VectorSpace::norm(Index v) const noexcept { return impl_->norms[v]; }

int VectorSpace::trace_mul(Element a, Element b) const noexcept {
  if (!impl_->trmul.empty()) return impl_->trmul[a * impl_->field.q() + b];
  return impl_->field.trace(impl_->field.mul(a, b));
}

int VectorSpace::dot_trace(Index x, Index m) const noexcept {
  const auto cx = coords(x), cm = coords(m);
  const int p = impl_->field.p();
  int s = 0;
  for (int i = 0; i < impl_->d; ++i) s += trace_mul(cx[i], cm[i]);
  return s % p;
}

}  // namespace ffres
