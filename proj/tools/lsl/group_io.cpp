// Copyright 2026 The lsl Authors
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


#include "group_io.hpp"

#include <fstream>

#include "lsl/error.hpp"

namespace lsl::cli {

grp::GroupPresentation parse_group(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::kIngestion, "group JSON must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "name" && key != "degree" && key != "generators")
      fail(ErrorCode::kIngestion, "unknown key in group JSON: " + key);
  if (!j.contains("name") || !j["name"].is_string())
    fail(ErrorCode::kIngestion, "group JSON needs a string \"name\"");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned())
    fail(ErrorCode::kIngestion, "group JSON needs a non-negative integer \"degree\"");
  if (!j.contains("generators") || !j["generators"].is_array())
    fail(ErrorCode::kIngestion, "group JSON needs an array \"generators\"");

  grp::GroupPresentation g;
  g.name = j["name"].get<std::string>();
  g.degree = j["degree"].get<std::size_t>();
  for (const auto& gen : j["generators"]) {
    if (!gen.is_array()) fail(ErrorCode::kIngestion, "each generator must be an array of integers");
    grp::Perm p;
    for (const auto& x : gen) {
      if (!x.is_number_unsigned()) fail(ErrorCode::kIngestion, "permutation entries must be non-negative integers");
      p.push_back(x.get<std::uint32_t>());
    }
    g.generators.push_back(std::move(p));
  }
  grp::validate(g);
  return g;
}

grp::GroupPresentation load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIngestion, "cannot open group file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::kIngestion, path + ": " + e.what());
  }
  return parse_group(j);
}

nlohmann::json group_to_json(const grp::GroupPresentation& g) {
  return {{"name", g.name}, {"degree", g.degree}, {"generators", g.generators}};
}

}  // namespace lsl::cli
