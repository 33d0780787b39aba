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

#include "ffres/harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "ffres/constructions.hpp"
#include "ffres/error.hpp"
#include "ffres/random.hpp"
#include "ffres/resultant.hpp"
#include "ffres/transform.hpp"

namespace ffres::harness {

using nlohmann::json;

namespace {

template <class Fn>
double median_seconds(int reps, Fn&& fn) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto a = std::chrono::steady_clock::now();
    fn();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - a).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

}  // namespace

bool BenchReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.agree; });
}

json BenchReport::to_json() const {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back({{"what", r.what},
                   {"q", r.q},
                   {"d", r.d},
                   {"detail", r.detail},
                   {"agree", r.agree},
                   {"slow_seconds", r.slow_seconds},
                   {"fast_seconds", r.fast_seconds},
                   {"speedup", r.speedup}});
  }
  return json{{"rows", arr}, {"ok", ok()}};
}

BenchRow bench_transform(const FieldSpec& f, int d, int reps, std::uint64_t seed) {
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(f.p), f.n), d);
  Rng rng(seed);
  std::vector<Complex> v(space.size());
  for (auto& z : v) z = {rng.unit() * 2 - 1, rng.unit() * 2 - 1};
  const PointFn fn(space, std::move(v));
  BenchRow row;
  row.what = "transform";
  row.q = f.q();
  row.d = d;
  row.detail = "naive vs axis";
  const auto slow = hat(fn, Kernel::naive);
  const auto fast = hat(fn, Kernel::axis);
  double err = 0;
  for (Index i = 0; i < space.size(); ++i) err = std::max(err, std::abs(slow.at(i) - fast.at(i)));
  row.agree = err <= 1e-9;
  if (!row.agree) return row;
  row.slow_seconds = median_seconds(reps, [&] { (void)hat(fn, Kernel::naive); });
  row.fast_seconds = median_seconds(reps, [&] { (void)hat(fn, Kernel::axis); });
  row.speedup = row.fast_seconds > 0 ? row.slow_seconds / row.fast_seconds : 0;
  return row;
}

BenchReport run_bench(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.mode == Mode::exact) fail(Errc::exact_mode_unsupported, "bench runs in float mode; pass --mode float");
  BenchReport rep;
  std::vector<std::pair<FieldSpec, int>> grid;
  if (cfg.fields || cfg.dims) {
    for (const auto& f : cfg.fields ? *cfg.fields : std::vector<FieldSpec>{{7, 1}})
      for (int d : cfg.dims ? *cfg.dims : std::vector<int>{4}) grid.push_back({f, d});
  } else {
    grid = {{{5, 1}, 2}, {{7, 1}, 2}, {{5, 1}, 4}, {{7, 1}, 4}};
  }
  std::uint64_t id = 0;
  for (const auto& [f, d] : grid) {
    rep.rows.push_back(bench_transform(f, d, cfg.reps, derive_seed(cfg.seed, id++)));
    const VectorSpace space(Field::make(static_cast<std::uint64_t>(f.p), f.n, cfg.field_cap), d, cfg.grid_cap);
    for (int k : cfg.ks ? *cfg.ks : std::vector<int>{2, 3}) {
      Rng rng(derive_seed(cfg.seed, id++));
      const std::uint64_t size = std::max<std::uint64_t>(1, space.size() / 4);
      std::vector<PointSet> sets;
      for (int j = 0; j < k; ++j) sets.push_back(random_set(space, size, rng.next()));
      BenchRow row;
      row.what = "nu";
      row.q = f.q();
      row.d = d;
      row.detail = "k=" + std::to_string(k) + " |E|=" + std::to_string(size);
      NuProfile brute;
      try {
        brute = nu_brute(sets, cfg.brute_cap);
      } catch (const Error& e) {
        if (e.code() != Errc::too_large) throw;
        continue;
      }
      row.agree = nu_fourier(sets, Mode::floating).nu == brute.nu;
      if (row.agree) {
        row.slow_seconds = median_seconds(cfg.reps, [&] { (void)nu_brute(sets, cfg.brute_cap); });
        row.fast_seconds = median_seconds(cfg.reps, [&] { (void)nu_fourier(sets, Mode::floating); });
        row.speedup = row.fast_seconds > 0 ? row.slow_seconds / row.fast_seconds : 0;
      }
      rep.rows.push_back(row);
    }
  }
  return rep;
}

}  // namespace ffres::harness
