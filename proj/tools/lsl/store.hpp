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

#include <cstdint>
#include <string>
#include <vector>

#include "lsl/ffla/matrix.hpp"

namespace lsl::cli {

// Matrix file layout: "LSL1", then rows, cols, p, e as little-endian u32,
// then the row-major entries, each ceil(log2 q) bits wide, packed LSB-first
// and zero-padded to a whole byte.

std::uint32_t entry_bits(std::uint32_t q);
std::vector<std::uint8_t> encode_matrix(const ffla::Matrix& m);
/// Throws kIngestion on a bad magic, size or entry.
ffla::Matrix decode_matrix(const std::vector<std::uint8_t>& bytes);

void write_matrix(const std::string& path, const ffla::Matrix& m);
ffla::Matrix read_matrix(const std::string& path);

}  // namespace lsl::cli
