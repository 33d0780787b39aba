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

#include <benchmark/benchmark.h>

#include "ffres/constructions.hpp"
#include "ffres/random.hpp"
#include "ffres/resultant.hpp"
#include "ffres/sphere.hpp"
#include "ffres/transform.hpp"

namespace {

using namespace ffres;

PointFn random_fn(int q, int d) {
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(q)), d);
  Rng rng(7);
  std::vector<Complex> v(space.size());
  for (auto& z : v) z = {rng.unit(), rng.unit()};
  return PointFn(space, std::move(v));
}

void BM_TransformNaive(benchmark::State& st) {
  const auto f = random_fn(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(hat(f, Kernel::naive));
}

void BM_TransformAxis(benchmark::State& st) {
  const auto f = random_fn(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)));
  for (auto _ : st) benchmark::DoNotOptimize(hat(f, Kernel::axis));
}

std::vector<PointSet> random_sets(int q, int d, int k) {
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(q)), d);
  Rng rng(11);
  std::vector<PointSet> sets;
  for (int j = 0; j < k; ++j) sets.push_back(random_set(space, space.size() / 4, rng.next()));
  return sets;
}

void BM_NuBrute(benchmark::State& st) {
  const auto sets = random_sets(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), static_cast<int>(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(nu_brute(sets));
}

void BM_NuFourierFloat(benchmark::State& st) {
  const auto sets = random_sets(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), static_cast<int>(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(nu_fourier(sets, Mode::floating));
}

void BM_NuFourierExact(benchmark::State& st) {
  const auto sets = random_sets(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), static_cast<int>(st.range(2)));
  for (auto _ : st) benchmark::DoNotOptimize(nu_fourier(sets, Mode::exact));
}

void BM_SphereSums(benchmark::State& st) {
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(st.range(0))), static_cast<int>(st.range(1)));
  Index m = 0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(sphere_sums(space, m));
    m = (m + 1) % space.size();
  }
}

}  // namespace

BENCHMARK(BM_TransformNaive)->Args({5, 2})->Args({7, 2})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TransformAxis)->Args({5, 2})->Args({7, 2})->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NuBrute)->Args({5, 2, 2})->Args({7, 4, 2})->Args({7, 4, 3})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NuFourierFloat)->Args({5, 2, 2})->Args({7, 4, 2})->Args({7, 4, 3})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NuFourierExact)->Args({5, 2, 2})->Args({5, 4, 3})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SphereSums)->Args({5, 4})->Args({7, 4})->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
