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

#include "lsl/modrep/module.hpp"

#include "lsl/error.hpp"

namespace lsl::modrep {

using ffla::EchelonBasis;

ModulePtr make_module(FieldPtr field, std::vector<Matrix> action, std::string label) {
  const std::size_t dim = action.empty() ? 0 : action.front().rows();
  for (const auto& a : action) {
    if (a.rows() != dim || a.cols() != dim)
      fail(ErrorCode::kInvalidArgument, "action matrices must be square of equal size");
    if (!ffla::is_invertible(a))
      fail(ErrorCode::kInvalidArgument, "action matrix is not invertible");
  }
  auto m = std::make_shared<GModule>();
  m->field = std::move(field);
  m->dim = dim;
  m->action = std::move(action);
  m->label = std::move(label);
  return m;
}

ModulePtr trivial_module(FieldPtr field, std::size_t num_generators) {
  auto m = std::make_shared<GModule>();
  m->dim = 1;
  m->action.assign(num_generators, Matrix::identity(field, 1));
  m->field = std::move(field);
  m->label = "k";
  return m;
}

ModulePtr zero_module(FieldPtr field, std::size_t num_generators) {
  auto m = std::make_shared<GModule>();
  m->dim = 0;
  m->action.assign(num_generators, Matrix(field, 0, 0));
  m->field = std::move(field);
  m->label = "0";
  return m;
}

bool is_equivariant(const ModuleMap& f) {
  const GModule& s = *f.source;
  const GModule& t = *f.target;
  if (f.matrix.rows() != s.dim || f.matrix.cols() != t.dim) return false;
  if (s.num_generators() != t.num_generators()) return false;
  for (std::size_t g = 0; g < s.num_generators(); ++g)
    if (!(s.action[g] * f.matrix == f.matrix * t.action[g])) return false;
  return true;
}

ModuleMap compose(const ModuleMap& first, const ModuleMap& second) {
  return {first.source, second.target, first.matrix * second.matrix};
}

ModuleMap identity_map(const ModulePtr& m) {
  return {m, m, Matrix::identity(m->field, m->dim)};
}

Submodule submodule_from_basis(const ModulePtr& m, const Matrix& basis) {
  ffla::RrefResult r = ffla::rref(basis);
  Matrix u = r.rref;
  u.truncate_rows(r.rank);
  std::vector<Matrix> action;
  action.reserve(m->num_generators());
  for (const auto& a : m->action) {
    Matrix ua = u * a;
    Matrix c = ua.select_cols(r.pivot_columns);
    if (!(c * u == ua)) fail(ErrorCode::kNotSubmodule, "span is not invariant under the action");
    action.push_back(std::move(c));
  }
  auto sub = std::make_shared<GModule>();
  sub->field = m->field;
  sub->dim = r.rank;
  sub->action = std::move(action);
  return {sub, {sub, m, std::move(u)}};
}

Quotient quotient(const ModulePtr& m, const ModuleMap& sub) {
  if (sub.target.get() != m.get() && sub.target->dim != m->dim)
    fail(ErrorCode::kInvalidArgument, "quotient: map does not land in the module");
  if (!is_equivariant(ModuleMap{sub.source, m, sub.matrix}))
    fail(ErrorCode::kNotSubmodule, "quotient: not an equivariant inclusion");
  const ffla::Field& f = *m->field;
  ffla::RrefResult r = ffla::rref(sub.matrix);
  const std::size_t d = m->dim;
  std::vector<long> pivot_row(d, -1);
  for (std::size_t i = 0; i < r.rank; ++i) pivot_row[r.pivot_columns[i]] = static_cast<long>(i);
  std::vector<std::size_t> comp;
  for (std::size_t j = 0; j < d; ++j)
    if (pivot_row[j] < 0) comp.push_back(j);

  Matrix proj(m->field, d, comp.size());
  for (std::size_t t = 0; t < comp.size(); ++t) proj.set(comp[t], t, 1);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t t = 0; t < comp.size(); ++t) {
      Elem v = r.rref.at(i, comp[t]);
      if (v) proj.set(r.pivot_columns[i], t, f.neg(v));
    }

  std::vector<Matrix> action;
  for (const auto& a : m->action) action.push_back(a.select_rows(comp) * proj);
  auto q = std::make_shared<GModule>();
  q->field = m->field;
  q->dim = comp.size();
  q->action = std::move(action);
  return {q, {m, q, std::move(proj)}};
}

Matrix spin_basis(const std::vector<Matrix>& gens, const Matrix& vectors) {
  EchelonBasis basis(vectors.field_ptr(), vectors.cols());
  for (std::size_t r = 0; r < vectors.rows(); ++r) basis.add(vectors, r);
  for (std::size_t next = 0; next < basis.size(); ++next) {
    for (const auto& g : gens) {
      Matrix w = basis.rows().row(next) * g;
      basis.reduce(w, 0);
      if (!w.row_is_zero(0)) basis.add_reduced(w, 0);
    }
    if (basis.size() == basis.dim()) break;
  }
  return basis.rref_basis();
}

Submodule spin(const ModulePtr& m, const Matrix& vectors) {
  return submodule_from_basis(m, spin_basis(m->action, vectors));
}

Submodule kernel(const ModuleMap& f) {
  return submodule_from_basis(f.source, ffla::left_kernel(f.matrix));
}

Submodule image(const ModuleMap& f) {
  return submodule_from_basis(f.target, ffla::row_basis(f.matrix));
}

ModulePtr direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) fail(ErrorCode::kInvalidArgument, "direct_sum of nothing");
  const std::size_t ngens = parts.front()->num_generators();
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p->dim;
  std::vector<Matrix> action(ngens, Matrix(parts.front()->field, dim, dim));
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t g = 0; g < ngens; ++g)
      for (std::size_t i = 0; i < p->dim; ++i)
        for (std::size_t j = 0; j < p->dim; ++j)
          if (Elem v = p->action[g].at(i, j)) action[g].set(off + i, off + j, v);
    off += p->dim;
  }
  auto m = std::make_shared<GModule>();
  m->field = parts.front()->field;
  m->dim = dim;
  m->action = std::move(action);
  return m;
}

ModulePtr tensor(const ModulePtr& a, const ModulePtr& b) {
  std::vector<Matrix> action;
  for (std::size_t g = 0; g < a->num_generators(); ++g)
    action.push_back(Matrix::kron(a->action[g], b->action[g]));
  auto m = std::make_shared<GModule>();
  m->field = a->field;
  m->dim = a->dim * b->dim;
  m->action = std::move(action);
  return m;
}

ModulePtr dual(const ModulePtr& a) {
  std::vector<Matrix> action;
  for (const auto& g : a->action) action.push_back(ffla::inverse(g).value().transpose());
  auto m = std::make_shared<GModule>();
  m->field = a->field;
  m->dim = a->dim;
  m->action = std::move(action);
  return m;
}

ModulePtr transposed(const ModulePtr& a) {
  std::vector<Matrix> action;
  for (const auto& g : a->action) action.push_back(g.transpose());
  auto m = std::make_shared<GModule>();
  m->field = a->field;
  m->dim = a->dim;
  m->action = std::move(action);
  return m;
}

Matrix word_matrix(const GModule& m, const std::vector<std::size_t>& word) {
  Matrix out = Matrix::identity(m.field, m.dim);
  for (auto g : word) out = out * m.action[g];
  return out;
}

}  // namespace lsl::modrep
