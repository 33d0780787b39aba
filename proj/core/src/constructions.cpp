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

#include "ffres/constructions.hpp"

#include <string>

#include "ffres/error.hpp"
#include "ffres/random.hpp"

namespace ffres {

std::vector<PointSet> subfield_sets(int p, int d, int k) {
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(Errc::unsupported_field, "subfield construction needs an odd prime p, got " + std::to_string(p));
  }
  if (d < 2 || d % 2 != 0) fail(Errc::odd_dimension, "subfield construction needs even d >= 2");
  if (k < 2) fail(Errc::bad_params, "k must be >= 2");
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(p), 2), d);
  // prime subfield elements encode as 0..p-1
  std::vector<Index> idx;
  std::vector<Element> x(static_cast<std::size_t>(d));
  Index total = 1;
  for (int i = 0; i < d; ++i) total *= static_cast<Index>(p);
  for (Index c = 0; c < total; ++c) {
    Index r = c;
    for (int i = d - 1; i >= 0; --i) {
      x[i] = r % p;
      r /= p;
    }
    idx.push_back(space.encode(x));
  }
  const PointSet e(space, std::move(idx));
  return std::vector<PointSet>(static_cast<std::size_t>(k), e);
}

PointSet isotropic_line(const Field& field) {
  const auto i = field.sqrt(field.neg(1));
  if (!i) fail(Errc::minus_one_not_square, "-1 is not a square in F_" + std::to_string(field.q()));
  const VectorSpace space(field, 2);
  std::vector<Index> idx;
  for (Element t = 0; t < field.q(); ++t) {
    const Element x[2] = {t, field.mul(*i, t)};
    idx.push_back(space.encode(x));
  }
  return PointSet(space, std::move(idx));
}

PointSet random_set(const VectorSpace& space, std::uint64_t size, std::uint64_t seed) {
  if (size > space.size()) {
    fail(Errc::size_out_of_range,
         "size " + std::to_string(size) + " exceeds q^d = " + std::to_string(space.size()));
  }
  Rng rng(seed);
  std::vector<Index> idx;
  for (auto v : rng.sample(space.size(), size)) idx.push_back(static_cast<Index>(v));
  return PointSet(space, std::move(idx));
}

}  // namespace ffres
