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


#pragma once

#include <string>

#include <json.hpp>

#include "lsl/grp/group.hpp"

namespace lsl::cli {

/// Parses {"name", "degree", "generators"} with 0-indexed permutations.
/// Throws kIngestion on missing, unknown or ill-typed keys.
grp::GroupPresentation parse_group(const nlohmann::json& j);
grp::GroupPresentation load_group_file(const std::string& path);
nlohmann::json group_to_json(const grp::GroupPresentation& g);

}  // namespace lsl::cli
