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

#include "ffres/point_set.hpp"

#include <algorithm>
#include <string>

#include "ffres/error.hpp"

namespace ffres {

PointSet::PointSet(VectorSpace space, std::vector<Index> indices)
    : space_(std::move(space)), idx_(std::move(indices)) {
  std::sort(idx_.begin(), idx_.end());
  idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
  if (!idx_.empty() && idx_.back() >= space_.size()) {
    fail(Errc::bad_params, "vector index " + std::to_string(idx_.back()) + " outside F_q^d");
  }
  bits_.assign((static_cast<std::size_t>(space_.size()) + 63) / 64, 0);
  for (auto v : idx_) bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

PointSet PointSet::full(const VectorSpace& space) {
  std::vector<Index> all(space.size());
  for (Index v = 0; v < space.size(); ++v) all[v] = v;
  return PointSet(space, std::move(all));
}

PointSet PointSet::translate(Index s) const {
  std::vector<Index> out;
  out.reserve(idx_.size());
  for (auto v : idx_) out.push_back(space_.add(v, s));
  return PointSet(space_, std::move(out));
}

PointSet PointSet::negate() const {
  std::vector<Index> out;
  out.reserve(idx_.size());
  for (auto v : idx_) out.push_back(space_.neg(v));
  return PointSet(space_, std::move(out));
}

void require_common_space(std::span<const PointSet> sets) {
  for (const auto& s : sets) {
    if (!(s.space() == sets.front().space())) {
      fail(Errc::dimension_mismatch, "sets live in different spaces");
    }
  }
}

}  // namespace ffres
