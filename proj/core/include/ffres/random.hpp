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
#include <random>
#include <vector>

namespace ffres {

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Per-instance stream seed: mix64(master + 0x9E3779B97F4A7C15 * (id + 1)).
/// Serial and parallel sweeps draw identical streams for the same id.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t id) noexcept;

/// mt19937_64 with a portable bounded draw. The standard distributions are
/// implementation-defined, so they are not used anywhere in the library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform in [0, n), n >= 1, by rejection.
  std::uint64_t below(std::uint64_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit();

  /// size distinct values from [0, n) in increasing order.
  std::vector<std::uint64_t> sample(std::uint64_t n, std::uint64_t size);

 private:
  std::mt19937_64 eng_;
};

}  // namespace ffres
