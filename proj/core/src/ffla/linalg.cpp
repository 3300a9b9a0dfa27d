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

#include "lsl/ffla/linalg.hpp"

#include "lsl/error.hpp"

namespace lsl::ffla {

RrefResult rref(const Matrix& m) {
  RrefResult out{m, 0, {}};
  Matrix& a = out.rref;
  const Field& f = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(r, piv);
    a.scale_row(r, f.inv(a.at(r, c)));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem v = a.at(i, c);
      if (v) a.add_row_multiple(i, f.neg(v), a, r);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix row_basis(const Matrix& m) {
  RrefResult r = rref(m);
  r.rref.truncate_rows(r.rank);
  return std::move(r.rref);
}

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const Field& f = m.field();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  Matrix out(m.field_ptr(), cols - r.rank, cols);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    out.set(k, free, 1);
    for (std::size_t i = 0; i < r.rank; ++i) {
      Elem v = r.rref.at(i, free);
      if (v) out.set(k, r.pivot_columns[i], f.neg(v));
    }
    ++k;
  }
  return out;
}

Matrix left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) fail(ErrorCode::kInvalidArgument, "solve: row mismatch");
  RrefResult r = rref(Matrix::concat(a, b));
  const std::size_t n = a.cols();
  Matrix x(a.field_ptr(), n, b.cols());
  for (std::size_t i = 0; i < r.rank; ++i) {
    std::size_t pc = r.pivot_columns[i];
    if (pc >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem v = r.rref.at(i, n + j);
      if (v) x.set(pc, j, v);
    }
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix(m.field_ptr(), 0, 0);
  RrefResult r = rref(Matrix::concat(m, Matrix::identity(m.field_ptr(), n)));
  if (r.rank < n || r.pivot_columns[n - 1] != n - 1) return std::nullopt;
  return r.rref.col_range(n, 2 * n);
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

Matrix subspace_sum(const Matrix& u, const Matrix& v) {
  return row_basis(Matrix::stack(u, v));
}

Matrix subspace_intersect(const Matrix& u, const Matrix& v) {
  Matrix bu = row_basis(u), bv = row_basis(v);
  if (bu.rows() == 0 || bv.rows() == 0) return Matrix(u.field_ptr(), 0, u.cols());
  // (alpha | beta) with alpha U + beta V = 0; alpha U spans the intersection.
  Matrix k = left_kernel(Matrix::stack(bu, bv));
  if (k.rows() == 0) return Matrix(u.field_ptr(), 0, u.cols());
  return row_basis(k.col_range(0, bu.rows()) * bu);
}

EchelonBasis::EchelonBasis(FieldPtr field, std::size_t dim)
    : field_(field), ambient_(dim), rows_(field, 0, dim) {}

void EchelonBasis::reduce(Matrix& v, std::size_t r) const {
  const Field& f = *field_;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Elem c = v.at(r, pivots_[i]);
    if (c) v.add_row_multiple(r, f.neg(c), rows_, i);
  }
}

void EchelonBasis::reduce_tracked(Matrix& v, std::size_t r, std::vector<Elem>& coeffs) const {
  const Field& f = *field_;
  coeffs.assign(pivots_.size(), 0);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    Elem c = v.at(r, pivots_[i]);
    if (c) {
      coeffs[i] = c;
      v.add_row_multiple(r, f.neg(c), rows_, i);
    }
  }
}

bool EchelonBasis::add(const Matrix& v, std::size_t r) {
  Matrix w = v.row(r);
  reduce(w, 0);
  if (w.row_is_zero(0)) return false;
  add_reduced(w, 0);
  return true;
}

void EchelonBasis::add_reduced(Matrix& v, std::size_t r) {
  std::size_t lead = v.leading_column(r);
  v.scale_row(r, field_->inv(v.at(r, lead)));
  rows_.append_row(v, r);
  pivots_.push_back(lead);
}

bool EchelonBasis::contains(const Matrix& v, std::size_t r) const {
  Matrix w = v.row(r);
  reduce(w, 0);
  return w.row_is_zero(0);
}

Matrix EchelonBasis::rref_basis() const { return row_basis(rows_); }

}  // namespace lsl::ffla
