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

#include "lsl/ffla/matrix.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

#include "lsl/error.hpp"

namespace lsl::ffla {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field()))
    fail(ErrorCode::kInvalidArgument, "matrices over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols) {
  packed_ = field_->is_gf2();
  if (packed_) {
    stride_ = (cols + 63) / 64;
    bits_.assign(rows * stride_, 0);
  } else {
    stride_ = cols;
    elems_.assign(rows * stride_, 0);
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(FieldPtr field,
                         const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  std::vector<std::uint32_t> flat;
  flat.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) fail(ErrorCode::kInvalidArgument, "ragged matrix rows");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_entries(std::move(field), r, c, flat);
}

Matrix Matrix::from_entries(FieldPtr field, std::size_t rows, std::size_t cols,
                            std::span<const std::uint32_t> entries) {
  if (entries.size() != rows * cols)
    fail(ErrorCode::kInvalidArgument, "entry count does not match shape");
  Matrix m(std::move(field), rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::uint32_t v = entries[i * cols + j];
      if (!m.field().valid(v))
        fail(ErrorCode::kInvalidArgument, "entry " + std::to_string(v) + " is not a field element");
      m.set(i, j, static_cast<Elem>(v));
    }
  return m;
}

bool Matrix::row_is_zero(std::size_t r) const {
  if (packed_) {
    const std::uint64_t* w = row_bits(r);
    for (std::size_t k = 0; k < stride_; ++k)
      if (w[k]) return false;
    return true;
  }
  const Elem* e = row_elems(r);
  for (std::size_t k = 0; k < cols_; ++k)
    if (e[k]) return false;
  return true;
}

std::size_t Matrix::leading_column(std::size_t r) const {
  if (packed_) {
    const std::uint64_t* w = row_bits(r);
    for (std::size_t k = 0; k < stride_; ++k)
      if (w[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
    return cols_;
  }
  const Elem* e = row_elems(r);
  for (std::size_t k = 0; k < cols_; ++k)
    if (e[k]) return k;
  return cols_;
}

void Matrix::add_row_multiple(std::size_t r, Elem c, const Matrix& src, std::size_t sr) {
  assert(src.cols_ == cols_);
  if (c == 0) return;
  if (packed_) {
    std::uint64_t* d = row_bits(r);
    const std::uint64_t* s = src.row_bits(sr);
    for (std::size_t k = 0; k < stride_; ++k) d[k] ^= s[k];
    return;
  }
  Elem* d = row_elems(r);
  const Elem* s = src.row_elems(sr);
  const Field& f = *field_;
  if (const Elem* mrow = f.mul_row(c)) {
    if (f.char_two()) {
      for (std::size_t k = 0; k < cols_; ++k) d[k] ^= mrow[s[k]];
    } else if (f.prime_field()) {
      const Elem p = static_cast<Elem>(f.p());
      for (std::size_t k = 0; k < cols_; ++k) {
        Elem v = static_cast<Elem>(d[k] + mrow[s[k]]);
        d[k] = v >= p ? static_cast<Elem>(v - p) : v;
      }
    } else {
      for (std::size_t k = 0; k < cols_; ++k) d[k] = f.add(d[k], mrow[s[k]]);
    }
    return;
  }
  for (std::size_t k = 0; k < cols_; ++k)
    if (s[k]) d[k] = f.add(d[k], f.mul(c, s[k]));
}

void Matrix::scale_row(std::size_t r, Elem c) {
  if (c == 1) return;
  if (packed_) {
    if (c == 0) std::fill_n(row_bits(r), stride_, 0);
    return;
  }
  Elem* d = row_elems(r);
  for (std::size_t k = 0; k < cols_; ++k) d[k] = field_->mul(c, d[k]);
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (packed_)
    std::swap_ranges(row_bits(a), row_bits(a) + stride_, row_bits(b));
  else
    std::swap_ranges(row_elems(a), row_elems(a) + stride_, row_elems(b));
}

void Matrix::copy_row_from(std::size_t r, const Matrix& src, std::size_t sr) {
  assert(src.cols_ == cols_);
  if (packed_)
    std::copy_n(src.row_bits(sr), stride_, row_bits(r));
  else
    std::copy_n(src.row_elems(sr), stride_, row_elems(r));
}

void Matrix::append_row(const Matrix& src, std::size_t sr) {
  append_zero_row();
  copy_row_from(rows_ - 1, src, sr);
}

void Matrix::append_zero_row() {
  ++rows_;
  if (packed_)
    bits_.resize(rows_ * stride_, 0);
  else
    elems_.resize(rows_ * stride_, 0);
}

void Matrix::append_rows(const Matrix& src) {
  if (src.rows_ == 0) return;
  if (cols_ != src.cols_) fail(ErrorCode::kInvalidArgument, "append_rows: column mismatch");
  if (packed_)
    bits_.insert(bits_.end(), src.bits_.begin(), src.bits_.end());
  else
    elems_.insert(elems_.end(), src.elems_.begin(), src.elems_.end());
  rows_ += src.rows_;
}

void Matrix::truncate_rows(std::size_t n) {
  if (n >= rows_) return;
  rows_ = n;
  if (packed_)
    bits_.resize(rows_ * stride_);
  else
    elems_.resize(rows_ * stride_);
}

Matrix Matrix::row_range(std::size_t begin, std::size_t end) const {
  Matrix out(field_, end - begin, cols_);
  if (packed_)
    std::copy(bits_.begin() + static_cast<std::ptrdiff_t>(begin * stride_),
              bits_.begin() + static_cast<std::ptrdiff_t>(end * stride_), out.bits_.begin());
  else
    std::copy(elems_.begin() + static_cast<std::ptrdiff_t>(begin * stride_),
              elems_.begin() + static_cast<std::ptrdiff_t>(end * stride_), out.elems_.begin());
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) out.copy_row_from(i, *this, idx[i]);
  return out;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) {
      Elem v = at(i, idx[j]);
      if (v) out.set(i, j, v);
    }
  return out;
}

Matrix Matrix::col_range(std::size_t begin, std::size_t end) const {
  std::vector<std::size_t> idx(end - begin);
  for (std::size_t j = 0; j < idx.size(); ++j) idx[j] = begin + j;
  return select_cols(idx);
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      Elem v = at(i, j);
      if (v) out.set(j, i, v);
    }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) fail(ErrorCode::kInvalidArgument, "multiply: shape mismatch");
  Matrix out(field_, rows_, o.cols_);
  if (o.cols_ == 0 || rows_ == 0) return out;
  if (packed_ && rows_ >= 32 && cols_ >= 16) {
    // Four Russians: tables of all XOR combinations of 8 consecutive rows.
    const std::size_t w = o.stride_;
    std::vector<std::uint64_t> table(256 * w);
    for (std::size_t kb = 0; kb < cols_; kb += 8) {
      const std::size_t nb = std::min<std::size_t>(8, cols_ - kb);
      std::fill_n(table.begin(), w, 0);
      for (std::size_t x = 1; x < (std::size_t{1} << nb); ++x) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(x));
        const std::uint64_t* prev = &table[(x & (x - 1)) * w];
        const std::uint64_t* src = o.row_bits(kb + low);
        std::uint64_t* dst = &table[x * w];
        for (std::size_t k = 0; k < w; ++k) dst[k] = prev[k] ^ src[k];
      }
      const std::size_t word = kb >> 6;
      const unsigned shift = static_cast<unsigned>(kb & 63);
      for (std::size_t i = 0; i < rows_; ++i) {
        const std::size_t byte = (bits_[i * stride_ + word] >> shift) & 0xffu;
        if (!byte) continue;
        const std::uint64_t* t = &table[byte * w];
        std::uint64_t* dst = out.row_bits(i);
        for (std::size_t k = 0; k < w; ++k) dst[k] ^= t[k];
      }
    }
    return out;
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    if (packed_) {
      const std::uint64_t* a = row_bits(i);
      for (std::size_t kw = 0; kw < stride_; ++kw) {
        std::uint64_t bits = a[kw];
        while (bits) {
          std::size_t k = kw * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          out.add_row_multiple(i, 1, o, k);
        }
      }
    } else {
      const Elem* a = row_elems(i);
      for (std::size_t k = 0; k < cols_; ++k)
        if (a[k]) out.add_row_multiple(i, a[k], o, k);
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "add: shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.add_row_multiple(i, 1, o, i);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorCode::kInvalidArgument, "sub: shape mismatch");
  Matrix out = *this;
  const Elem minus_one = field_->neg(1);
  for (std::size_t i = 0; i < rows_; ++i) out.add_row_multiple(i, minus_one, o, i);
  return out;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.scale_row(i, c);
  return out;
}

Matrix Matrix::plus_scalar(Elem c) const {
  if (rows_ != cols_) fail(ErrorCode::kInvalidArgument, "plus_scalar: matrix not square");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out.set(i, i, field_->add(out.at(i, i), c));
  return out;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (!(field() == o.field())) return false;
  return packed_ ? bits_ == o.bits_ : elems_ == o.elems_;
}

bool Matrix::is_zero() const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!row_is_zero(i)) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::uint32_t> Matrix::entries() const {
  std::vector<std::uint32_t> out(rows_ * cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i * cols_ + j] = at(i, j);
  return out;
}

Matrix Matrix::stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols_ != bottom.cols_) fail(ErrorCode::kInvalidArgument, "stack: column mismatch");
  Matrix out = top;
  out.append_rows(bottom);
  return out;
}

Matrix Matrix::concat(const Matrix& left, const Matrix& right) {
  if (left.rows_ != right.rows_) fail(ErrorCode::kInvalidArgument, "concat: row mismatch");
  Matrix out(left.field_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t i = 0; i < left.rows_; ++i) {
    for (std::size_t j = 0; j < left.cols_; ++j)
      if (Elem v = left.at(i, j)) out.set(i, j, v);
    for (std::size_t j = 0; j < right.cols_; ++j)
      if (Elem v = right.at(i, j)) out.set(i, left.cols_ + j, v);
  }
  return out;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (Elem v = a.at(i, j)) out.set(i, j, v);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j)
      if (Elem v = b.at(i, j)) out.set(a.rows_ + i, a.cols_ + j, v);
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  Matrix out(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
  const Field& f = a.field();
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      Elem x = a.at(i, j);
      if (!x) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (Elem y = b.at(k, l)) out.set(i * b.rows_ + k, j * b.cols_ + l, f.mul(x, y));
    }
  return out;
}

}  // namespace lsl::ffla
