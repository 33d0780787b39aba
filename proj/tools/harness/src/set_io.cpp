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

#include "ffres/harness/set_io.hpp"

#include <fstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffres/error.hpp"

namespace ffres::harness {

using nlohmann::json;

PointSet read_set_file(const std::string& path, std::uint64_t cap) {
  std::ifstream in(path);
  if (!in) fail(Errc::io, "cannot open set file " + path);
  json j;
  try {
    in >> j;
    const int p = j.at("p").get<int>();
    const int n = j.value("n", 1);
    const int d = j.at("d").get<int>();
    const VectorSpace space(Field::make(static_cast<std::uint64_t>(p), n, cap), d, cap);
    std::vector<Index> idx;
    for (const auto& e : j.at("elements")) {
      const auto x = e.get<std::vector<Element>>();
      if (static_cast<int>(x.size()) != d) {
        fail(Errc::dimension_mismatch, path + ": element has " + std::to_string(x.size()) + " coordinates");
      }
      for (auto c : x) {
        if (c >= space.field().q()) fail(Errc::config_invalid, path + ": coordinate out of range");
      }
      idx.push_back(space.encode(x));
    }
    return PointSet(space, std::move(idx));
  } catch (const json::exception& e) {
    fail(Errc::config_invalid, path + ": " + e.what());
  }
}

void write_set_file(const std::string& path, const PointSet& set) {
  const VectorSpace& space = set.space();
  json j{{"p", space.field().p()}, {"n", space.field().n()}, {"d", space.dim()}};
  json el = json::array();
  for (auto v : set.indices()) {
    const auto c = space.coords(v);
    el.push_back(std::vector<Element>(c.begin(), c.end()));
  }
  j["elements"] = std::move(el);
  std::ofstream out(path);
  if (!out) fail(Errc::io, "cannot write " + path);
  out << j.dump() << "\n";
}

}  // namespace ffres::harness
