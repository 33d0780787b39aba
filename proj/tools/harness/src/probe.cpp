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

#include "ffres/harness/probe.hpp"

#include <algorithm>
#include <cmath>

#include "ffres/claims.hpp"
#include "ffres/constructions.hpp"
#include "ffres/error.hpp"
#include "ffres/harness/parallel.hpp"
#include "ffres/harness/report.hpp"
#include "ffres/harness/set_io.hpp"
#include "ffres/random.hpp"
#include "ffres/resultant.hpp"

namespace ffres::harness {

using nlohmann::json;

namespace {

struct Job {
  std::string kind;
  FieldSpec f;
  int d = 0;
  int k = 0;
  std::uint64_t size = 0;  // random only
  std::uint64_t seed = 0;
};

std::vector<std::uint64_t> auto_sizes(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (int j = 1; j <= 8; ++j) {
    out.push_back(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(std::pow(double(n), j / 8.0)))));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

NuProfile profile(std::span<const PointSet> sets, const ExperimentConfig& cfg) {
  if (cfg.mode == Mode::floating) return nu_fourier(sets, Mode::floating);
  try {
    return nu_brute(sets, cfg.brute_cap);
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
    return nu_fourier(sets, Mode::exact);
  }
}

ProbeRow measure(std::uint64_t id, const std::string& kind, const FieldSpec& f, int d,
                 std::span<const PointSet> given, const ExperimentConfig& cfg) {
  const auto sets = with_convention({given.begin(), given.end()}, cfg);
  ProbeRow row;
  row.instance = id;
  row.kind = kind;
  row.q = f.q();
  row.d = d;
  row.k = static_cast<int>(sets.size());
  const auto nu = profile(sets, cfg);
  row.sizes = nu.sizes;
  row.product = nu.product().get_str();
  row.delta = delta_set(nu).size();
  row.nu0 = nu.nu[0];
  row.ratio = static_cast<double>(row.delta) / static_cast<double>(row.q);
  try {
    const auto chain = theorem31_chain(sets, cfg.brute_cap);
    if (chain.hypothesis) row.bound = chain.bound;
  } catch (const Error& e) {
    if (e.code() != Errc::too_large) throw;
  }
  return row;
}

VectorSpace space_of(const ExperimentConfig& cfg, const FieldSpec& f, int d) {
  return VectorSpace(Field::make(static_cast<std::uint64_t>(f.p), f.n, cfg.field_cap), d, cfg.grid_cap);
}

std::uint64_t isqrt(std::uint64_t q) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(q)));
  while (r * r > q) --r;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r;
}

}  // namespace

bool ProbeReport::ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const ProbeRow& r) { return r.pass && !*r.pass; });
}

std::string ProbeReport::csv() const {
  std::string s = "instance,kind,q,d,k,sizes,product,delta,nu0,bound,ratio,pass\n";
  for (const auto& r : rows) {
    std::string sizes;
    for (std::size_t i = 0; i < r.sizes.size(); ++i) sizes += (i ? "x" : "") + std::to_string(r.sizes[i]);
    s += std::to_string(r.instance) + "," + r.kind + "," + std::to_string(r.q) + "," + std::to_string(r.d) + "," +
         std::to_string(r.k) + "," + sizes + "," + r.product + "," + std::to_string(r.delta) + "," +
         std::to_string(r.nu0) + "," + (r.bound ? fmt_double(*r.bound) : "") + "," + fmt_double(r.ratio) + "," +
         (r.pass ? (*r.pass ? "true" : "false") : "") + "\n";
  }
  return s;
}

json ProbeReport::to_json() const {
  json rows_j = json::array();
  for (const auto& r : rows) {
    rows_j.push_back({{"instance", r.instance},
                      {"kind", r.kind},
                      {"q", r.q},
                      {"d", r.d},
                      {"k", r.k},
                      {"sizes", r.sizes},
                      {"product", r.product},
                      {"delta", r.delta},
                      {"nu0", r.nu0},
                      {"bound", r.bound ? json(*r.bound) : json(nullptr)},
                      {"ratio", r.ratio},
                      {"pass", r.pass ? json(*r.pass) : json(nullptr)}});
  }
  return json{{"rows", rows_j}, {"ok", ok()}};
}

ProbeReport run_probe(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Job> jobs;
  const auto fields = cfg.fields ? *cfg.fields : std::vector<FieldSpec>{{3, 1}, {5, 1}, {7, 1}};
  const auto dims = cfg.dims ? *cfg.dims : std::vector<int>{2};
  const auto ks = cfg.ks ? *cfg.ks : std::vector<int>{2, 3};
  std::uint64_t id = 0;
  if (cfg.source == "random") {
    for (const auto& f : fields)
      for (int d : dims)
        for (int k : ks) {
          std::uint64_t n = 1;
          for (int i = 0; i < d; ++i) n *= f.q();
          auto sizes = cfg.sizes.empty() ? auto_sizes(n) : cfg.sizes;
          for (auto s : sizes) {
            if (s < 1 || s > n) fail(Errc::config_invalid, "probe size " + std::to_string(s) + " out of range");
            for (int r = 0; r < cfg.reps; ++r) {
              jobs.push_back({"random", f, d, k, s, derive_seed(cfg.seed, id)});
              ++id;
            }
          }
        }
  } else if (cfg.source == "file") {
    jobs.push_back({"file", {}, 0, static_cast<int>(cfg.set_files.size()), 0, 0});
  } else {
    for (const auto& f : fields)
      for (int d : dims)
        for (int k : ks) jobs.push_back({cfg.source, f, d, k, 0, 0});
  }

  std::vector<std::optional<ProbeRow>> out(jobs.size());
  parallel_for(jobs.size(), cfg.threads, [&](std::size_t i) {
    const Job& j = jobs[i];
    if (j.kind == "random") {
      const auto space = space_of(cfg, j.f, j.d);
      Rng rng(j.seed);
      std::vector<PointSet> sets;
      for (int t = 0; t < j.k; ++t) sets.push_back(random_set(space, j.size, rng.next()));
      out[i] = measure(i, j.kind, j.f, j.d, sets, cfg);
    } else if (j.kind == "file") {
      std::vector<PointSet> sets;
      for (const auto& path : cfg.set_files) sets.push_back(read_set_file(path, cfg.grid_cap));
      const auto& field = sets.front().space().field();
      out[i] = measure(i, j.kind, {field.p(), field.n()}, sets.front().space().dim(), sets, cfg);
    } else if (j.kind == "subfield") {
      // needs q = p^2 and even d
      if (j.f.n != 2 || j.d % 2 != 0) return;
      const auto sets = subfield_sets(j.f.p, j.d, j.k);
      auto row = measure(i, j.kind, j.f, j.d, sets, cfg);
      row.pass = row.delta == isqrt(row.q);
      out[i] = row;
    } else if (j.kind == "isotropic") {
      const Field field = Field::make(static_cast<std::uint64_t>(j.f.p), j.f.n, cfg.field_cap);
      if (j.d != 2 || j.k != 2 || !field.sqrt(field.neg(1))) return;
      const auto e = isotropic_line(field);
      const std::vector<PointSet> sets{e, e};
      auto row = measure(i, j.kind, j.f, j.d, sets, cfg);
      row.pass = row.delta == 1;
      out[i] = row;
    } else {
      const auto space = space_of(cfg, j.f, j.d);
      const std::vector<PointSet> sets(static_cast<std::size_t>(j.k), PointSet::full(space));
      auto row = measure(i, j.kind, j.f, j.d, sets, cfg);
      row.pass = row.delta == row.q;
      out[i] = row;
    }
  });

  ProbeReport rep;
  for (auto& r : out) {
    if (r) rep.rows.push_back(std::move(*r));
  }
  if (cfg.source != "random") return rep;

  // threshold curves over the random sweep, in job order
  std::uint64_t tid = jobs.size();
  std::size_t i = 0;
  while (i < rep.rows.size()) {
    std::size_t j = i;
    while (j < rep.rows.size() && rep.rows[j].q == rep.rows[i].q && rep.rows[j].d == rep.rows[i].d &&
           rep.rows[j].k == rep.rows[i].k)
      ++j;
    std::optional<ProbeRow> hit;
    for (std::size_t a = i; a < j && !hit;) {
      std::size_t b = a;
      while (b < j && rep.rows[b].sizes == rep.rows[a].sizes) ++b;
      std::vector<std::size_t> deltas;
      std::vector<std::uint64_t> nus;
      for (std::size_t c = a; c < b; ++c) {
        deltas.push_back(rep.rows[c].delta);
        nus.push_back(rep.rows[c].nu0);
      }
      std::sort(deltas.begin(), deltas.end());
      std::sort(nus.begin(), nus.end());
      const std::size_t med = deltas[deltas.size() / 2];
      if (10 * med >= 9 * rep.rows[a].q) {
        ProbeRow t = rep.rows[a];
        t.kind = "threshold";
        t.delta = med;
        t.nu0 = nus[nus.size() / 2];
        t.bound.reset();
        t.ratio = static_cast<double>(med) / static_cast<double>(t.q);
        hit = t;
      }
      a = b;
    }
    ProbeRow t;
    if (hit) {
      t = *hit;
    } else {
      t = rep.rows[i];
      t.kind = "threshold";
      t.sizes.clear();
      t.product.clear();
      t.delta = 0;
      t.nu0 = 0;
      t.bound.reset();
      t.ratio = 0;
    }
    t.instance = tid++;
    t.pass.reset();
    rep.rows.insert(rep.rows.begin() + static_cast<std::ptrdiff_t>(j), t);
    i = j + 1;
  }
  return rep;
}

}  // namespace ffres::harness
