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

#include "ffres/harness/config.hpp"

#include <fstream>
#include <set>

#include "ffres/error.hpp"

namespace ffres::harness {

using nlohmann::json;

std::uint64_t FieldSpec::q() const {
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
  return q;
}

std::string mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }

Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "float" || s == "floating") return Mode::floating;
  fail(Errc::config_invalid, "mode must be exact or float, got '" + s + "'");
}

void ExperimentConfig::validate() const {
  auto bad = [](const std::string& m) { fail(Errc::config_invalid, m); };
  if (fields) {
    for (const auto& f : *fields) {
      if (f.p < 3 || !is_prime(static_cast<std::uint64_t>(f.p))) bad("field p must be an odd prime");
      if (f.n < 1) bad("field degree must be >= 1");
      if (f.q() > field_cap) bad("field order " + std::to_string(f.q()) + " exceeds field cap");
    }
  }
  if (dims) {
    for (int d : *dims) {
      if (d < 1 || d > 16) bad("dimension out of range: " + std::to_string(d));
    }
  }
  if (ks) {
    for (int k : *ks) {
      if (k < 2 || k > 8) bad("k out of range: " + std::to_string(k));
    }
  }
  if (reps < 1) bad("reps must be >= 1");
  if (threads < 1 || threads > 256) bad("threads must lie in [1, 256]");
  static const std::set<std::string> sources{"random", "file", "subfield", "isotropic", "full"};
  if (!sources.count(source)) bad("unknown set source '" + source + "'");
  if (source == "file" && set_files.empty()) bad("file source needs set_files");
  if (convention != "sum" && convention != "difference") bad("unknown convention '" + convention + "'");
}

void to_json(json& j, const FieldSpec& f) { j = json::array({f.p, f.n}); }

void from_json(const json& j, FieldSpec& f) {
  if (j.is_array() && j.size() == 2) {
    f.p = j.at(0).get<int>();
    f.n = j.at(1).get<int>();
  } else if (j.is_object()) {
    f.p = j.at("p").get<int>();
    f.n = j.value("n", 1);
  } else {
    fail(Errc::config_invalid, "field must be [p, n] or {\"p\":.., \"n\":..}");
  }
}

void to_json(json& j, const ExperimentConfig& c) {
  j = json{{"suite", c.suite},         {"sizes", c.sizes},        {"reps", c.reps},
           {"source", c.source},       {"set_files", c.set_files}, {"suites", c.suites},
           {"convention", c.convention},
           {"seed", c.seed},           {"mode", mode_name(c.mode)}, {"out", c.out},
           {"threads", c.threads},     {"radius", c.radius},       {"field_cap", c.field_cap},
           {"grid_cap", c.grid_cap},   {"brute_cap", c.brute_cap}};
  j["fields"] = c.fields ? json(*c.fields) : json(nullptr);
  j["dims"] = c.dims ? json(*c.dims) : json(nullptr);
  j["ks"] = c.ks ? json(*c.ks) : json(nullptr);
}

void from_json(const json& j, ExperimentConfig& c) {
  if (!j.is_object()) fail(Errc::config_invalid, "config must be a JSON object");
  static const std::set<std::string> keys{"suite",   "fields", "dims",      "ks",        "sizes",
                                          "reps",    "source", "set_files", "suites",    "seed",
                                          "mode",    "out",    "threads",   "radius",    "field_cap",
                                          "grid_cap", "brute_cap", "convention"};
  for (const auto& [k, v] : j.items()) {
    if (!keys.count(k)) fail(Errc::config_invalid, "unknown config key '" + k + "'");
  }
  try {
    c.suite = j.value("suite", c.suite);
    if (j.contains("fields") && !j["fields"].is_null()) c.fields = j["fields"].get<std::vector<FieldSpec>>();
    if (j.contains("dims") && !j["dims"].is_null()) c.dims = j["dims"].get<std::vector<int>>();
    if (j.contains("ks") && !j["ks"].is_null()) c.ks = j["ks"].get<std::vector<int>>();
    c.sizes = j.value("sizes", c.sizes);
    c.reps = j.value("reps", c.reps);
    c.source = j.value("source", c.source);
    c.set_files = j.value("set_files", c.set_files);
    c.convention = j.value("convention", c.convention);
    c.suites = j.value("suites", c.suites);
    c.seed = j.value("seed", c.seed);
    if (j.contains("mode")) c.mode = parse_mode(j["mode"].get<std::string>());
    c.out = j.value("out", c.out);
    c.threads = j.value("threads", c.threads);
    c.radius = j.value("radius", c.radius);
    c.field_cap = j.value("field_cap", c.field_cap);
    c.grid_cap = j.value("grid_cap", c.grid_cap);
    c.brute_cap = j.value("brute_cap", c.brute_cap);
  } catch (const json::exception& e) {
    fail(Errc::config_invalid, e.what());
  }
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::config_invalid, "cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(Errc::config_invalid, path + ": " + e.what());
  }
  ExperimentConfig c = j.get<ExperimentConfig>();
  c.validate();
  return c;
}

std::vector<PointSet> with_convention(std::vector<PointSet> sets, const ExperimentConfig& cfg) {
  if (cfg.convention == "difference" && !sets.empty()) sets.back() = sets.back().negate();
  return sets;
}

FieldSpec field_from_q(std::uint64_t q) {
  for (std::uint64_t p = 3; p <= q; p += 2) {
    if (q % p != 0) continue;
    if (!is_prime(p)) break;
    int n = 0;
    std::uint64_t r = q;
    while (r % p == 0) {
      r /= p;
      ++n;
    }
    if (r == 1) return {static_cast<int>(p), n};
    break;
  }
  fail(Errc::config_invalid, std::to_string(q) + " is not an odd prime power");
}

}  // namespace ffres::harness
