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

#include <ostream>

#include <json.hpp>

namespace lsl::cli {

/// Plain-text view of a report: one "key: value" line per scalar, scalar
/// arrays comma-joined, nested objects indented.
void render_text(const nlohmann::json& report, std::ostream& out);

}  // namespace lsl::cli
