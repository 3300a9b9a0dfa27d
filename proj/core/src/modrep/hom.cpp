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

#include "lsl/modrep/hom.hpp"

#include "lsl/error.hpp"

namespace lsl::modrep {

namespace {

enum class EventKind { kGenerator, kDefinition, kRelation };

struct SpinEvent {
  EventKind kind;
  std::size_t source = 0;     // basis vector being multiplied
  std::size_t generator = 0;  // group generator, or module generator ordinal
  std::size_t result = 0;     // new basis vector (generator / definition)
};

Matrix stacked_minus_identity(const GModule& m, bool transpose) {
  const ffla::Field& f = *m.field;
  Matrix out(m.field, 0, m.dim);
  for (const auto& a : m.action) {
    Matrix b = transpose ? a.transpose() : a;
    b = b.plus_scalar(f.neg(1));
    out.append_rows(b);
  }
  return out;
}

}  // namespace

Matrix fixed_functionals(const GModule& m) {
  if (m.action.empty()) return Matrix::identity(m.field, m.dim);
  return ffla::kernel_basis(stacked_minus_identity(m, false));
}

Matrix fixed_vectors(const GModule& m) {
  if (m.action.empty()) return Matrix::identity(m.field, m.dim);
  return ffla::kernel_basis(stacked_minus_identity(m, true));
}

std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n) {
  if (m->num_generators() != n->num_generators())
    fail(ErrorCode::kInvalidArgument, "hom_space: modules for different groups");
  const std::size_t dm = m->dim, dn = n->dim;
  if (dm == 0 || dn == 0) return {};
  const auto& field = m->field;
  const ffla::Field& f = *field;
  const std::size_t ngens = m->num_generators();

  // Trivial target: closed form.
  bool trivial_target = dn == 1;
  for (const auto& b : n->action) trivial_target = trivial_target && b.at(0, 0) == 1;
  if (trivial_target) {
    Matrix cols = fixed_functionals(*m);
    std::vector<ModuleMap> out;
    for (std::size_t t = 0; t < cols.rows(); ++t) out.push_back({m, n, cols.row(t).transpose()});
    return out;
  }

  // 1. Spin a basis of m from standard basis vectors, recording events.
  ffla::EchelonBasis ech(field, dm);
  Matrix spun(field, 0, dm);
  std::vector<SpinEvent> events;
  std::size_t num_module_gens = 0;
  std::size_t probe = 0;
  for (std::size_t i = 0; i < spun.rows() || spun.rows() < dm;) {
    if (i == spun.rows()) {
      Matrix e(field, 1, dm);
      for (;; ++probe) {
        e = Matrix(field, 1, dm);
        e.set(0, probe, 1);
        if (!ech.contains(e, 0)) break;
      }
      ech.add(e, 0);
      spun.append_row(e, 0);
      events.push_back({EventKind::kGenerator, 0, num_module_gens++, spun.rows() - 1});
      continue;
    }
    for (std::size_t g = 0; g < ngens; ++g) {
      Matrix v = spun.row(i) * m->action[g];
      if (spun.rows() < dm) {
        Matrix w = v;
        ech.reduce(w, 0);
        if (!w.row_is_zero(0)) {
          ech.add_reduced(w, 0);
          spun.append_row(v, 0);
          events.push_back({EventKind::kDefinition, i, g, spun.rows() - 1});
          continue;
        }
      }
      events.push_back({EventKind::kRelation, i, g, 0});
    }
    ++i;
  }
  const Matrix spun_inv = ffla::inverse(spun).value();
  std::vector<Matrix> coords;  // row i of coords[g]: b_i * g in the spun basis
  coords.reserve(ngens);
  for (std::size_t g = 0; g < ngens; ++g) coords.push_back((spun * m->action[g]) * spun_inv);

  // 2. Unknowns are the images of the module generators, r * dn of them.
  std::size_t s = num_module_gens * dn;
  Matrix sol = Matrix::identity(field, s);  // current solutions, in unknown coordinates
  std::vector<Matrix> img(dm);              // img[k]: s x dn images of b_k
  std::vector<bool> defined(dm, false);
  for (const auto& ev : events) {
    if (ev.kind == EventKind::kGenerator) {
      img[ev.result] = sol.col_range(ev.generator * dn, (ev.generator + 1) * dn);
      defined[ev.result] = true;
    } else if (ev.kind == EventKind::kDefinition) {
      img[ev.result] = img[ev.source] * n->action[ev.generator];
      defined[ev.result] = true;
    } else {
      Matrix d = img[ev.source] * n->action[ev.generator];
      const Matrix& c = coords[ev.generator];
      for (std::size_t k = 0; k < dm; ++k) {
        Elem ck = c.at(ev.source, k);
        if (!ck) continue;
        const Elem neg = f.neg(ck);
        for (std::size_t r = 0; r < s; ++r) d.add_row_multiple(r, neg, img[k], r);
      }
      if (d.is_zero()) continue;
      Matrix keep = ffla::left_kernel(d);
      s = keep.rows();
      if (s == 0) return {};
      sol = keep * sol;
      for (std::size_t k = 0; k < dm; ++k)
        if (defined[k]) img[k] = keep * img[k];
    }
  }

  // 3. Back to the standard basis of m.
  std::vector<ModuleMap> out;
  out.reserve(s);
  for (std::size_t t = 0; t < s; ++t) {
    Matrix x(field, dm, dn);
    for (std::size_t k = 0; k < dm; ++k) x.copy_row_from(k, img[k], t);
    out.push_back({m, n, spun_inv * x});
  }
  return out;
}

}  // namespace lsl::modrep
