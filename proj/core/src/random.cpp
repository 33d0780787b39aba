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

#include "ffres/random.hpp"

#include <algorithm>

#include "ffres/error.hpp"

namespace ffres {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t id) noexcept {
  return mix64(master + 0x9E3779B97F4A7C15ULL * (id + 1));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) fail(Errc::bad_params, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = eng_();
  } while (x >= limit);
  return x % n;
}

double Rng::unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> Rng::sample(std::uint64_t n, std::uint64_t size) {
  if (size > n) fail(Errc::size_out_of_range, "sample larger than population");
  // partial Fisher-Yates over an explicit permutation
  std::vector<std::uint64_t> perm(n);
  for (std::uint64_t i = 0; i < n; ++i) perm[i] = i;
  for (std::uint64_t i = 0; i < size; ++i) {
    const std::uint64_t j = i + below(n - i);
    std::swap(perm[i], perm[j]);
  }
  perm.resize(size);
  std::sort(perm.begin(), perm.end());
  return perm;
}

}  // namespace ffres
