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

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "ffres/error.hpp"
#include "ffres/harness/bench.hpp"
#include "ffres/harness/config.hpp"
#include "ffres/harness/probe.hpp"
#include "ffres/harness/report.hpp"
#include "ffres/harness/restrict.hpp"
#include "ffres/harness/set_io.hpp"
#include "ffres/harness/verify.hpp"
#include "ffres/resultant.hpp"
#include "ffres/version.hpp"

using namespace ffres;
using namespace ffres::harness;
using nlohmann::json;

namespace {

struct Flags {
  std::uint64_t seed = 1;
  std::string mode;
  std::string out;
  std::string config;
  int threads = 1;
  std::vector<std::uint64_t> qs;
  std::vector<int> ds;
  std::vector<int> ks;
  std::string convention;
};

void add_grid(CLI::App* sub, Flags& f) {
  sub->add_option("--q", f.qs, "field orders (odd prime powers)");
  sub->add_option("--d", f.ds, "dimensions");
  sub->add_option("--k", f.ks, "number of sets");
}

void add_convention(CLI::App* sub, Flags& f) {
  sub->add_option("--convention", f.convention, "sum or difference (last set negated)")
      ->check(CLI::IsMember({"sum", "difference"}));
}

ExperimentConfig build_config(const CLI::App& app, const Flags& f, const std::string& suite) {
  ExperimentConfig cfg = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  cfg.suite = suite;
  if (app.count("--seed")) cfg.seed = f.seed;
  if (app.count("--mode")) cfg.mode = parse_mode(f.mode);
  if (app.count("--out")) cfg.out = f.out;
  if (app.count("--threads")) cfg.threads = f.threads;
  if (!f.qs.empty()) {
    std::vector<FieldSpec> fields;
    for (auto q : f.qs) fields.push_back(field_from_q(q));
    cfg.fields = fields;
  }
  if (!f.ds.empty()) cfg.dims = f.ds;
  if (!f.ks.empty()) cfg.ks = f.ks;
  if (!f.convention.empty()) cfg.convention = f.convention;
  cfg.validate();
  return cfg;
}

void emit_json(const ExperimentConfig& cfg, json body) { write_output(cfg.out, envelope(cfg, std::move(body)).dump(2) + "\n"); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-field k-resultant and sphere restriction toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--seed", f.seed, "master seed");
  app.add_option("--mode", f.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--out", f.out, "output path (default stdout)");
  app.add_option("--config", f.config, "JSON experiment config")->check(CLI::ExistingFile);
  app.add_option("--threads", f.threads, "worker threads")->check(CLI::Range(1, 256));

  auto* verify = app.add_subcommand("verify", "run identity and inequality suites");
  std::vector<std::string> suites;
  std::string verify_format = "auto";
  verify->add_option("suites", suites, "suite names (default: all)");
  verify->add_option("--format", verify_format, "auto, json or csv")->check(CLI::IsMember({"auto", "json", "csv"}));
  add_grid(verify, f);

  auto* nu = app.add_subcommand("nu", "count nu_k(t) for sets read from files");
  std::vector<std::string> set_files;
  nu->add_option("--sets", set_files, "set files; one file is reused for all k sets")->required();
  add_grid(nu, f);
  add_convention(nu, f);

  auto* probe = app.add_subcommand("probe", "sweep random and structured sets");
  std::string source = "random", probe_format = "csv";
  std::vector<std::uint64_t> sizes;
  int reps = 0;
  probe->add_option("--source", source, "random, subfield, isotropic, full or file");
  probe->add_option("--sizes", sizes, "set sizes for the random sweep");
  probe->add_option("--reps", reps, "repetitions per size")->check(CLI::PositiveNumber);
  probe->add_option("--sets", set_files, "set files for --source file");
  probe->add_option("--format", probe_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_grid(probe, f);
  add_convention(probe, f);

  auto* restrict_cmd = app.add_subcommand("restrict", "restriction suites on one sphere");
  std::uint64_t rq = 0;
  int rd = 0;
  Element rt = 1;
  std::string rsuite;
  restrict_cmd->add_option("--q", rq, "field order")->required();
  restrict_cmd->add_option("--d", rd, "dimension")->required();
  restrict_cmd->add_option("--t", rt, "radius (field element encoding)");
  restrict_cmd->add_option("--suite", rsuite, "lorentz, rti, weak-probe or lemma54")
      ->required()
      ->check(CLI::IsMember(restrict_suite_names()));

  auto* bench = app.add_subcommand("bench", "time transforms and nu kernels");
  int bench_reps = 0;
  bench->add_option("--reps", bench_reps, "timed repetitions")->check(CLI::PositiveNumber);
  add_grid(bench, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (verify->parsed()) {
      auto cfg = build_config(app, f, "verify");
      if (!suites.empty()) cfg.suites = suites;
      const bool csv = verify_format == "csv" || (verify_format == "auto" && cfg.suites.size() == 1 &&
                                                  cfg.suites.front() == "spheres");
      if (csv) {
        const auto rows = sphere_rows(cfg);
        write_output(cfg.out, sphere_csv(rows));
        const bool ok = std::none_of(rows.begin(), rows.end(), [](const SphereRow& r) {
          return r.closed_form == "mismatch" || (r.d % 2 == 0 && r.t != 0 && r.ratio > kDecayThreshold);
        });
        return ok ? kExitOk : kExitAssertion;
      }
      const auto rep = run_verify(cfg);
      emit_json(cfg, rep.to_json());
      return rep.ok() ? kExitOk : kExitAssertion;
    }
    if (nu->parsed()) {
      auto cfg = build_config(app, f, "nu");
      cfg.source = "file";
      cfg.set_files = set_files;
      const int k = cfg.ks ? cfg.ks->front() : static_cast<int>(set_files.size());
      std::vector<PointSet> sets;
      for (const auto& path : set_files) sets.push_back(read_set_file(path, cfg.grid_cap));
      if (sets.size() == 1) sets.resize(static_cast<std::size_t>(std::max(k, 1)), sets.front());
      if (static_cast<int>(sets.size()) != k) fail(Errc::config_invalid, "--k does not match the number of set files");
      const auto& space = sets.front().space();
      for (const auto& s : sets) {
        if (!(s.space() == space)) fail(Errc::dimension_mismatch, "set files live in different spaces");
      }
      if (cfg.fields && cfg.fields->front().q() != space.field().q()) fail(Errc::config_invalid, "--q disagrees with set file");
      if (cfg.dims && cfg.dims->front() != space.dim()) fail(Errc::config_invalid, "--d disagrees with set file");
      sets = with_convention(std::move(sets), cfg);
      NuProfile prof;
      if (cfg.mode == Mode::floating) {
        prof = nu_fourier(sets, Mode::floating);
      } else {
        try {
          prof = nu_brute(sets, cfg.brute_cap);
        } catch (const Error& e) {
          if (e.code() != Errc::too_large) throw;
          prof = nu_fourier(sets, Mode::exact);
        }
      }
      json body{{"q", space.field().q()},
                {"d", space.dim()},
                {"k", k},
                {"sizes", prof.sizes},
                {"nu", prof.nu},
                {"product", prof.product().get_str()},
                {"delta_size", delta_set(prof).size()},
                {"convention", cfg.convention}};
      if (cfg.mode == Mode::floating) body["approx"] = prof.approx;
      emit_json(cfg, body);
      return kExitOk;
    }
    if (probe->parsed()) {
      auto cfg = build_config(app, f, "probe");
      cfg.source = source;
      if (!sizes.empty()) cfg.sizes = sizes;
      if (reps > 0) cfg.reps = reps;
      if (!set_files.empty()) cfg.set_files = set_files;
      cfg.validate();
      const auto rep = run_probe(cfg);
      if (probe_format == "json") {
        emit_json(cfg, rep.to_json());
      } else {
        write_output(cfg.out, rep.csv());
      }
      return rep.ok() ? kExitOk : kExitAssertion;
    }
    if (restrict_cmd->parsed()) {
      auto cfg = build_config(app, f, "restrict");
      const auto rep = run_restrict(field_from_q(rq), rd, rt, rsuite, cfg);
      write_output(cfg.out, rep.csv());
      return rep.ok() ? kExitOk : kExitAssertion;
    }
    if (bench->parsed()) {
      auto cfg = build_config(app, f, "bench");
      if (!app.count("--mode")) cfg.mode = Mode::floating;
      if (bench_reps > 0) cfg.reps = bench_reps;
      const auto rep = run_bench(cfg);
      emit_json(cfg, rep.to_json());
      return rep.ok() ? kExitOk : kExitAssertion;
    }
  } catch (const Error& e) {
    std::cerr << "ffres: " << e.what() << "\n";
    return e.code() == Errc::internal || e.code() == Errc::overflow ? 1 : kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "ffres: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
