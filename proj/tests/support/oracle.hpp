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

// Test-side oracles, written independently of the library algorithms:
// entrywise arithmetic, brute-force enumeration and plain generators.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "lsl/ffla/matrix.hpp"
#include "lsl/rng.hpp"

namespace lsl::oracle {

using ffla::Elem;
using ffla::FieldPtr;
using ffla::Matrix;

inline Matrix random_matrix(const FieldPtr& f, std::size_t r, std::size_t c, Rng& rng) {
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<Elem>(rng.below(f->q())));
  return m;
}

// Rows are random combinations of basis_rows random rows, so the rank is at
// most basis_rows.
inline Matrix random_combination_rows(const FieldPtr& f, std::size_t r, std::size_t c,
                                      std::size_t basis_rows, Rng& rng) {
  Matrix basis = random_matrix(f, basis_rows, c, rng);
  Matrix coeff = random_matrix(f, r, basis_rows, rng);
  return coeff * basis;
}

// Entrywise product with no packed-row tricks.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  const auto& f = a.field();
  Matrix out(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elem s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = f.add(s, f.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, s);
    }
  return out;
}

// Calls visit on every vector of GF(q)^n, given as a 1 x n matrix.
inline void for_each_vector(const FieldPtr& f, std::size_t n,
                            const std::function<void(const Matrix&)>& visit) {
  std::vector<Elem> digits(n, 0);
  Matrix v(f, 1, n);
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) v.set(0, i, digits[i]);
    visit(v);
    std::size_t i = 0;
    while (i < n && ++digits[i] == f->q()) digits[i++] = 0;
    if (i == n) return;
  }
}

// Number of vectors x in GF(q)^n with pred(x), by enumeration.
inline std::size_t count_vectors(const FieldPtr& f, std::size_t n,
                                 const std::function<bool(const Matrix&)>& pred) {
  std::size_t count = 0;
  for_each_vector(f, n, [&](const Matrix& v) { count += pred(v) ? 1 : 0; });
  return count;
}

// Is row vector v in the row span of basis? Decided by enumerating all
// combinations (basis must be small).
inline bool in_span_brute(const Matrix& basis, const Matrix& v) {
  const auto& f = basis.field_ptr();
  bool found = false;
  for_each_vector(f, basis.rows(), [&](const Matrix& c) {
    if (!found && c * basis == v) found = true;
  });
  if (basis.rows() == 0) return v.is_zero();
  return found;
}

// Size of the row span, by enumeration.
inline std::size_t span_size_brute(const Matrix& basis) {
  const auto& f = basis.field_ptr();
  if (basis.rows() == 0) return 1;
  std::vector<std::vector<std::uint32_t>> all;
  for_each_vector(f, basis.rows(), [&](const Matrix& c) { all.push_back((c * basis).entries()); });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size();
}

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace lsl::oracle
