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

#include "ffres/characters.hpp"

#include <vector>

namespace ffres {

CycNum add_char(const Field& field, Element x, Element twist) {
  const Character chi(field, twist);
  return CycNum::zeta_power(field.p(), chi.exponent(x));
}

CycNum char_orthogonality_sum(const VectorSpace& space, Index m, Element twist) {
  const int p = space.field().p();
  const Character chi(space.field(), twist);
  const Index tm = space.scale(chi.twist(), m);
  std::vector<std::int64_t> counts(p, 0);
  for (Index x = 0; x < space.size(); ++x) ++counts[space.dot_trace(tm, x)];
  return CycNum::from_zeta_counts(counts);
}

int quad_char(const Field& field, Element s) { return field.quad_char(s); }

ZetaVec gauss_sum_vec(const Field& field, Element twist) {
  const Character chi(field, twist);
  ZetaVec g(field.p());
  for (Element s = 1; s < field.q(); ++s) g.add_zeta(chi.exponent(s), field.quad_char(s));
  return g;
}

CycNum gauss_sum(const Field& field, Element twist) { return gauss_sum_vec(field, twist).to_cycnum(); }

}  // namespace ffres
