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

#include <optional>
#include <vector>

#include "lsl/ffla/matrix.hpp"

namespace lsl::ffla {

struct RrefResult {
  Matrix rref;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Reduced basis of the row space (the nonzero rows of rref).
Matrix row_basis(const Matrix& m);

/// Rows form a basis of {x : m x^T = 0}; cols - rank rows.
Matrix kernel_basis(const Matrix& m);

/// Rows form a basis of {x : x m = 0}.
Matrix left_kernel(const Matrix& m);

/// Particular solution of a x = b with free variables set to zero;
/// nullopt when the system is inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

Matrix subspace_sum(const Matrix& u, const Matrix& v);
Matrix subspace_intersect(const Matrix& u, const Matrix& v);

/// Incrementally grown subspace in semi-echelon form: row i has a 1 in
/// column pivot(i), and every later row is zero there.
class EchelonBasis {
 public:
  EchelonBasis(FieldPtr field, std::size_t dim);

  std::size_t dim() const { return ambient_; }
  std::size_t size() const { return rows_.rows(); }
  const Matrix& rows() const { return rows_; }
  std::size_t pivot(std::size_t i) const { return pivots_[i]; }

  /// Reduces row r of v in place against the basis.
  void reduce(Matrix& v, std::size_t r) const;
  /// Same, also recording the multiple of basis row i subtracted, so that
  /// the original row equals reduced + sum coeffs[i] * rows(i).
  void reduce_tracked(Matrix& v, std::size_t r, std::vector<Elem>& coeffs) const;
  /// Adds row r of v if it is outside the span; returns whether it was.
  bool add(const Matrix& v, std::size_t r);
  /// Adds an already reduced nonzero row.
  void add_reduced(Matrix& v, std::size_t r);
  bool contains(const Matrix& v, std::size_t r) const;

  /// Basis in reduced row-echelon form.
  Matrix rref_basis() const;

 private:
  FieldPtr field_;
  std::size_t ambient_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace lsl::ffla
