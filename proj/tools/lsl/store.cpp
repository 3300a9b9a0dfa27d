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


#include "store.hpp"

#include <fstream>
#include <iterator>

#include "lsl/error.hpp"

namespace lsl::cli {

namespace {

constexpr char kMagic[4] = {'L', 'S', 'L', '1'};
constexpr std::size_t kHeader = 20;

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

std::uint32_t get_u32(const std::vector<std::uint8_t>& in, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{in[at + i]} << (8 * i);
  return v;
}

}  // namespace

std::uint32_t entry_bits(std::uint32_t q) {
  std::uint32_t b = 0;
  while ((std::uint64_t{1} << b) < q) ++b;
  return b;
}

std::vector<std::uint8_t> encode_matrix(const ffla::Matrix& m) {
  const ffla::Field& f = m.field();
  std::vector<std::uint8_t> out(kMagic, kMagic + 4);
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.cols()));
  put_u32(out, f.p());
  put_u32(out, f.e());
  const std::uint32_t b = entry_bits(f.q());
  const std::uint64_t nbits = std::uint64_t{b} * m.rows() * m.cols();
  std::vector<std::uint8_t> body((nbits + 7) / 8, 0);
  std::uint64_t pos = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::uint32_t v = m.at(r, c);
      for (std::uint32_t k = 0; k < b; ++k, ++pos)
        if ((v >> k) & 1u) body[pos >> 3] |= static_cast<std::uint8_t>(1u << (pos & 7));
    }
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

ffla::Matrix decode_matrix(const std::vector<std::uint8_t>& in) {
  if (in.size() < kHeader || !std::equal(kMagic, kMagic + 4, in.begin()))
    fail(ErrorCode::kIngestion, "matrix file: bad magic");
  const std::uint32_t rows = get_u32(in, 4), cols = get_u32(in, 8);
  const std::uint32_t p = get_u32(in, 12), e = get_u32(in, 16);
  ffla::FieldPtr field;
  try {
    field = ffla::Field::make(p, e);
  } catch (const Error& err) {
    fail(ErrorCode::kIngestion, std::string("matrix file: bad field: ") + err.what());
  }
  const std::uint32_t b = entry_bits(field->q());
  const std::uint64_t nbits = std::uint64_t{b} * rows * cols;
  if (in.size() != kHeader + (nbits + 7) / 8) fail(ErrorCode::kIngestion, "matrix file: wrong length");
  ffla::Matrix m(field, rows, cols);
  std::uint64_t pos = std::uint64_t{kHeader} * 8;
  for (std::uint32_t r = 0; r < rows; ++r)
    for (std::uint32_t c = 0; c < cols; ++c) {
      std::uint32_t v = 0;
      for (std::uint32_t k = 0; k < b; ++k, ++pos) v |= std::uint32_t{(in[pos >> 3] >> (pos & 7)) & 1u} << k;
      if (v >= field->q()) fail(ErrorCode::kIngestion, "matrix file: entry out of range");
      m.set(r, c, static_cast<ffla::Elem>(v));
    }
  return m;
}

void write_matrix(const std::string& path, const ffla::Matrix& m) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::kIngestion, "cannot write " + path);
  const auto bytes = encode_matrix(m);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

ffla::Matrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kIngestion, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_matrix(bytes);
}

}  // namespace lsl::cli
