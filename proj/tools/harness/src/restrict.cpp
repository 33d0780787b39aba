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

#include "ffres/harness/restrict.hpp"

#include <algorithm>
#include <cmath>

#include "ffres/constructions.hpp"
#include "ffres/error.hpp"
#include "ffres/harness/parallel.hpp"
#include "ffres/harness/report.hpp"
#include "ffres/lorentz.hpp"
#include "ffres/measure.hpp"
#include "ffres/random.hpp"
#include "ffres/restriction.hpp"

namespace ffres::harness {

namespace {

RestrictRow make_row(std::string check, double measured, double bound, std::optional<bool> pass) {
  RestrictRow r;
  r.check = std::move(check);
  r.measured = measured;
  r.bound = bound;
  r.ratio = bound > 0 ? measured / bound : 0;
  r.pass = pass;
  return r;
}

std::vector<RestrictRow> lorentz_rows(const SphereTable& table, Element t, std::uint64_t seed) {
  std::vector<RestrictRow> rows;
  const std::size_t n = table.size(t);
  Rng rng(seed);
  std::vector<Complex> f(n);
  for (auto& z : f) z = {rng.unit() * 2 - 1, rng.unit() * 2 - 1};
  const Rearrangement re(f);
  const auto mu = MeasureSpace::sphere(n);
  for (const auto& p : {Exponent(4, 3), Exponent(2), Exponent(3), Exponent(4)}) {
    const double strong = norm(f, mu, p);
    const double weak = weak_norm(re, p);
    rows.push_back(make_row("weak_le_strong p=" + p.str(), weak, strong, weak <= strong * (1 + 1e-12) + 1e-15));
    const double lc = layer_cake_norm(re, p);
    rows.push_back(make_row("layer_cake p=" + p.str(), lc, strong, std::abs(lc - strong) <= 1e-9 * (1 + strong)));
    const double col = lorentz_norm(re, p, p);
    rows.push_back(make_row("collapse p=" + p.str(), col, strong, std::abs(col - strong) <= 1e-9 * (1 + strong)));
  }
  return rows;
}

}  // namespace

bool RestrictReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const RestrictRow& r) { return r.pass && !*r.pass; });
}

std::string RestrictReport::csv() const {
  std::string s = "instance,check,measured,bound,ratio,pass\n";
  for (const auto& r : rows) {
    s += std::to_string(r.instance) + "," + csv_escape(r.check) + "," + fmt_double(r.measured) + ",";
    s += r.pass ? fmt_double(r.bound) + "," + fmt_double(r.ratio) + "," + (*r.pass ? "true" : "false") : ",,";
    s += "\n";
  }
  return s;
}

const std::vector<std::string>& restrict_suite_names() {
  static const std::vector<std::string> n{"lorentz", "rti", "weak-probe", "lemma54"};
  return n;
}

RestrictReport run_restrict(const FieldSpec& f, int d, Element t, const std::string& suite,
                            const ExperimentConfig& cfg) {
  const auto& names = restrict_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    fail(Errc::config_invalid, "unknown restrict suite '" + suite + "'");
  }
  const VectorSpace space(Field::make(static_cast<std::uint64_t>(f.p), f.n, cfg.field_cap), d, cfg.grid_cap);
  if (t >= space.field().q()) fail(Errc::config_invalid, "radius must be a field element");
  if (t == 0) fail(Errc::zero_radius, "radius must be nonzero");
  const SphereTable table(space);

  std::vector<std::vector<RestrictRow>> per;
  if (suite == "lorentz") {
    constexpr std::size_t kInstances = 20;
    per.resize(kInstances);
    parallel_for(kInstances, cfg.threads,
                 [&](std::size_t i) { per[i] = lorentz_rows(table, t, derive_seed(cfg.seed, i)); });
  } else if (suite == "rti") {
    constexpr std::size_t kInstances = 200;
    per.resize(kInstances);
    const Exponent r0(12L * d - 8, 3L * d + 4);
    std::vector<std::tuple<Exponent, Exponent, Exponent>> triples{{Exponent(2), Exponent(3), Exponent(4)},
                                                                   {Exponent(2), Exponent(3), Exponent::infinity()}};
    if (Exponent(1) <= r0 && r0 < Exponent(3)) triples.emplace_back(r0, Exponent(3), Exponent::infinity());
    parallel_for(kInstances, cfg.threads, [&](std::size_t i) {
      Rng rng(derive_seed(cfg.seed, i));
      const auto e = random_set(space, 1 + rng.below(space.size()), rng.next());
      for (const auto& [a, r, b] : triples) {
        const auto rep = rti_audit(e, table, t, a, b, r);
        per[i].push_back(make_row("rti " + a.str() + "," + r.str() + "," + b.str() + " |E|=" +
                                      std::to_string(e.size()),
                                  rep.strong, rep.bound, rep.pass));
      }
    });
  } else if (suite == "lemma54") {
    constexpr std::size_t kInstances = 500;
    per.resize(kInstances);
    const auto decay = max_nonzero_hat(table, t);
    parallel_for(kInstances, cfg.threads, [&](std::size_t i) {
      Rng rng(derive_seed(cfg.seed, i));
      const auto e = random_set(space, 1 + rng.below(space.size()), rng.next());
      const auto rep = lemma54_check(e, table, t, decay);
      per[i].push_back(make_row("lemma54 |E|=" + std::to_string(e.size()), rep.lhs, rep.rhs, rep.pass));
    });
  } else {
    const auto rep = weak_type_probe(table, t, cfg.seed);
    per.resize(1);
    for (const auto& [family, v] : rep.family_max) {
      per[0].push_back(make_row("weak_probe r0=" + rep.r0.str() + " " + family, v, 0.0, std::nullopt));
    }
  }

  RestrictReport rep;
  std::uint64_t id = 0;
  for (auto& v : per)
    for (auto& r : v) {
      r.instance = id++;
      rep.rows.push_back(std::move(r));
    }
  return rep;
}

}  // namespace ffres::harness
