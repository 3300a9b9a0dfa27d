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


#include "report.hpp"

#include <string>

namespace lsl::cli {

namespace {

bool scalar_array(const nlohmann::json& a) {
  for (const auto& x : a)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const nlohmann::json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void render(const nlohmann::json& v, std::ostream& out, int depth) {
  const std::string pad(2 * depth, ' ');
  for (const auto& [key, x] : v.items()) {
    if (x.is_object()) {
      out << pad << key << ":\n";
      render(x, out, depth + 1);
    } else if (x.is_array() && scalar_array(x)) {
      out << pad << key << ": ";
      for (std::size_t i = 0; i < x.size(); ++i) out << (i ? ", " : "") << scalar(x[i]);
      out << '\n';
    } else if (x.is_array()) {
      out << pad << key << ":\n";
      for (const auto& item : x) {
        if (item.is_object()) {
          out << pad << "  -\n";
          render(item, out, depth + 2);
        } else {
          out << pad << "  - ";
          for (std::size_t i = 0; i < item.size(); ++i) out << (i ? ", " : "") << scalar(item[i]);
          out << '\n';
        }
      }
    } else {
      out << pad << key << ": " << scalar(x) << '\n';
    }
  }
}

}  // namespace

void render_text(const nlohmann::json& report, std::ostream& out) { render(report, out, 0); }

}  // namespace lsl::cli
