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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lsl/ffla/field.hpp"

namespace lsl::ffla {

/// Dense matrix over a finite field, row-major.
///
/// Over GF(2) rows are bit-packed into 64-bit words; every other field keeps
/// one Elem per entry. Algorithms above this layer are written against the
/// row operations below, which are specialized per storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix from_rows(FieldPtr field,
                          const std::vector<std::vector<std::uint32_t>>& rows);
  /// Row-major entries; throws kInvalidArgument on a bad length or encoding.
  static Matrix from_entries(FieldPtr field, std::size_t rows, std::size_t cols,
                             std::span<const std::uint32_t> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }
  bool packed() const { return packed_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const {
    if (packed_) return static_cast<Elem>((bits_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u);
    return elems_[r * stride_ + c];
  }
  void set(std::size_t r, std::size_t c, Elem v) {
    if (packed_) {
      std::uint64_t& w = bits_[r * stride_ + (c >> 6)];
      const std::uint64_t bit = std::uint64_t{1} << (c & 63);
      w = v ? (w | bit) : (w & ~bit);
    } else {
      elems_[r * stride_ + c] = v;
    }
  }

  // Row operations.
  bool row_is_zero(std::size_t r) const;
  /// Column of the first nonzero entry in row r, or cols() when zero.
  std::size_t leading_column(std::size_t r) const;
  /// row r += c * src.row(sr); src must have the same column count.
  void add_row_multiple(std::size_t r, Elem c, const Matrix& src, std::size_t sr);
  void scale_row(std::size_t r, Elem c);
  void swap_rows(std::size_t a, std::size_t b);
  void copy_row_from(std::size_t r, const Matrix& src, std::size_t sr);
  void append_row(const Matrix& src, std::size_t sr);
  void append_zero_row();
  void append_rows(const Matrix& src);
  void truncate_rows(std::size_t n);

  Matrix row(std::size_t r) const { return row_range(r, r + 1); }
  Matrix row_range(std::size_t begin, std::size_t end) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;
  Matrix col_range(std::size_t begin, std::size_t end) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  /// Adds c times the identity; square matrices only.
  Matrix plus_scalar(Elem c) const;
  bool operator==(const Matrix& o) const;
  bool is_zero() const;
  bool is_identity() const;

  /// Row-major entries as integer codes.
  std::vector<std::uint32_t> entries() const;

  /// Vertical / horizontal concatenation.
  static Matrix stack(const Matrix& top, const Matrix& bottom);
  static Matrix concat(const Matrix& left, const Matrix& right);
  /// Block-diagonal sum.
  static Matrix block_diag(const Matrix& a, const Matrix& b);
  /// Kronecker product.
  static Matrix kron(const Matrix& a, const Matrix& b);

  // Raw storage access for hot loops.
  std::uint64_t* row_bits(std::size_t r) { return &bits_[r * stride_]; }
  const std::uint64_t* row_bits(std::size_t r) const { return &bits_[r * stride_]; }
  Elem* row_elems(std::size_t r) { return &elems_[r * stride_]; }
  const Elem* row_elems(std::size_t r) const { return &elems_[r * stride_]; }
  std::size_t stride() const { return stride_; }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  bool packed_ = false;
  std::vector<std::uint64_t> bits_;
  std::vector<Elem> elems_;
};

}  // namespace lsl::ffla
