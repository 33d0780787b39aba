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

#pragma once

#include "ffres/cyclotomic.hpp"
#include "ffres/field.hpp"

namespace ffres {

/// chi_a(x) = zeta_p^{Tr(a x)}.
CycNum add_char(const Field& field, Element x, Element twist = 1);

/// sum over x in F_q^d of chi_a(m . x).
CycNum char_orthogonality_sum(const VectorSpace& space, Index m, Element twist = 1);

/// eta(s) in {-1, 0, 1}; eta(0) = 0.
int quad_char(const Field& field, Element s);

/// G_a = sum_{s != 0} eta(s) chi_a(s).
CycNum gauss_sum(const Field& field, Element twist = 1);

/// Same value as gauss_sum, as a Z[zeta_p] vector.
ZetaVec gauss_sum_vec(const Field& field, Element twist = 1);

}  // namespace ffres
