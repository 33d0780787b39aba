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

#include <cstdint>
#include <span>
#include <vector>

#include "ffres/field.hpp"

namespace ffres {

/// Subset of F_q^d as sorted, deduplicated vector indices plus a bitset.
class PointSet {
 public:
  PointSet(VectorSpace space, std::vector<Index> indices);

  static PointSet full(const VectorSpace& space);
  static PointSet empty(const VectorSpace& space) { return PointSet(space, {}); }

  const VectorSpace& space() const noexcept { return space_; }
  std::span<const Index> indices() const noexcept { return idx_; }
  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  bool contains(Index v) const noexcept {
    return v < space_.size() && ((bits_[v >> 6] >> (v & 63)) & 1u);
  }

  /// {v + s : v in E}
  PointSet translate(Index s) const;
  /// {-v : v in E}
  PointSet negate() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.space_ == b.space_ && a.idx_ == b.idx_;
  }

 private:
  VectorSpace space_;
  std::vector<Index> idx_;
  std::vector<std::uint64_t> bits_;
};

/// Throws DimensionMismatch unless every set lives in the same F_q^d.
void require_common_space(std::span<const PointSet> sets);

}  // namespace ffres
