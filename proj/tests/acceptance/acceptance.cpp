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

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ffres/harness/bench.hpp"
#include "ffres/harness/config.hpp"
#include "ffres/harness/probe.hpp"
#include "ffres/harness/verify.hpp"
#include "ffres/sphere.hpp"

using namespace ffres;
using namespace ffres::harness;

namespace {

int failed = 0;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int id, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

std::string summary(const SuiteResult& s) {
  return s.name + " cases=" + std::to_string(s.cases) + " failures=" + std::to_string(s.failures);
}

// runs one verify suite on a grid and checks pass, minimum case count and time
void suite_criterion(int id, const std::string& suite, ExperimentConfig cfg, std::uint64_t min_cases,
                     double time_limit = 0, const VerifyHooks& hooks = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const auto r = run_verify_suite(suite, cfg, hooks);
    const double dt = seconds_since(t0);
    bool ok = r.ok() && r.failures == 0 && r.cases >= min_cases;
    std::string detail = summary(r);
    if (time_limit > 0) {
      ok = ok && dt < time_limit;
      detail += " time=" + std::to_string(dt) + "s (limit " + std::to_string(static_cast<int>(time_limit)) + "s)";
    }
    report(id, ok, detail);
  } catch (const std::exception& e) {
    report(id, false, std::string("exception: ") + e.what());
  }
}

}  // namespace

int main() {
  ExperimentConfig base;

  {
    ExperimentConfig c = base;
    c.fields = std::vector<FieldSpec>{{3, 1}, {5, 1}, {7, 1}, {3, 2}};
    c.dims = std::vector<int>{2, 4};
    VerifyHooks exact;
    exact.sphere_closed_form = [](const VectorSpace& v, Element t, Index m) { return sphere_hat_closed(v, t, m); };
    suite_criterion(1, "spheres", c, 80448, 120, exact);
  }
  {
    ExperimentConfig c = base;
    c.fields = std::vector<FieldSpec>{{3, 1}, {5, 1}};
    c.dims = std::vector<int>{2, 3, 4};
    suite_criterion(2, "pair_sum", c, 397892, 120);
  }
  suite_criterion(3, "nu_oracle", base, 200);
  suite_criterion(4, "cauchy_schwarz", base, 200);
  suite_criterion(5, "claims", base, 1);
  suite_criterion(6, "rti", base, 200 * 6);
  suite_criterion(7, "lemma54", base, 500);
  suite_criterion(8, "exponents", base, 12);
  suite_criterion(9, "constructions", base, 6);
  suite_criterion(10, "decay", base, 1);
  suite_criterion(11, "gauss", base, 35);

  {
    bool ok = true;
    std::string detail;
    try {
      const auto row = bench_transform({7, 1}, 4, 5, 1);
      ok = row.agree && row.speedup >= 50;
      detail = "axis speedup at q=7 d=4: " + std::to_string(row.speedup) + "x (need >= 50x)";
      const auto t0 = std::chrono::steady_clock::now();
      const auto rep = run_verify(base);
      const double dt = seconds_since(t0);
      ok = ok && rep.ok() && dt < 300;
      detail += "; default verify " + std::string(rep.ok() ? "ok" : "FAILED") + " in " + std::to_string(dt) + "s";
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    report(12, ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    try {
      ExperimentConfig c = base;
      c.seed = 2024;
      const auto a = run_probe(c).csv();
      const auto b = run_probe(c).csv();
      c.threads = 4;
      const auto d = run_probe(c).csv();
      ok = a == b && a == d && !a.empty();
      detail = "probe CSV identical across repeats and 1 vs 4 threads (" + std::to_string(a.size()) + " bytes)";
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    report(13, ok, detail);
  }
  std::printf("%s: %d of 13 criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
