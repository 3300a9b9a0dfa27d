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

#include "lsl/modrep/projective.hpp"

#include <algorithm>

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"
#include "lsl/modrep/structure.hpp"

namespace lsl::modrep {

namespace {

struct Summand {
  ModulePtr module;
  Matrix inclusion;   // d x n
  Matrix projection;  // n x d
};

// inv[y] = x where u x = elements[y], so that inclusion.select_cols(inv) is
// inclusion * L_u.
std::vector<std::size_t> left_inverse_columns(const grp::GroupTable& t, std::uint32_t u) {
  std::vector<std::size_t> c(t.order());
  for (std::size_t x = 0; x < t.order(); ++x)
    c[t.index_of(grp::perm_mul(t.elements[u], t.elements[x]))] = x;
  return c;
}

// Restriction of x -> a x to the summand: inclusion * L_a * projection.
Matrix random_endomorphism(const Summand& u, const grp::GroupTable& t, Rng& rng,
                           const PimOptions& opt) {
  const ffla::Field& f = *u.module->field;
  Matrix acc(u.module->field, u.inclusion.rows(), u.inclusion.cols());
  for (std::size_t k = 0; k < opt.terms; ++k) {
    const auto g = static_cast<std::uint32_t>(rng.below(t.order()));
    const Elem c = static_cast<Elem>(1 + rng.below(f.q() - 1));
    Matrix moved = u.inclusion.select_cols(left_inverse_columns(t, g));
    for (std::size_t r = 0; r < acc.rows(); ++r) acc.add_row_multiple(r, c, moved, r);
  }
  return acc * u.projection;
}

// Splits u along the stabilized kernel and image of t^(2^j). False when t
// is invertible or nilpotent on u.
bool fitting_split_along(const Summand& u, Matrix t, Summand& a, Summand& b) {
  const std::size_t d = u.module->dim;
  std::size_t r = ffla::rank(t);
  if (r == d || r == 0) return false;
  for (;;) {
    Matrix t2 = t * t;
    const std::size_t r2 = ffla::rank(t2);
    t = std::move(t2);
    if (r2 == r) break;
    r = r2;
  }
  if (r == 0) return false;
  Submodule ker = submodule_from_basis(u.module, ffla::left_kernel(t));
  Submodule img = submodule_from_basis(u.module, ffla::row_basis(t));
  Matrix q = ffla::inverse(Matrix::stack(ker.inclusion.matrix, img.inclusion.matrix)).value();
  const std::size_t dk = ker.module->dim;
  a = {ker.module, ker.inclusion.matrix * u.inclusion, u.projection * q.col_range(0, dk)};
  b = {img.module, img.inclusion.matrix * u.inclusion, u.projection * q.col_range(dk, q.cols())};
  return true;
}

// Fitting decomposition along f(theta) for an irreducible factor f of the
// characteristic polynomial. Large summands skip the characteristic
// polynomial and try the linear polynomials x - c only.
bool fitting_split(const Summand& u, const Matrix& theta, Rng& rng, const PimOptions& opt,
                   Summand& a, Summand& b) {
  const ffla::Field& f = *u.module->field;
  if (u.module->dim <= opt.charpoly_limit) {
    const auto facs = ffla::poly::factor(f, ffla::poly::charpoly(theta), rng);
    if (facs.size() < 2) return false;
    return fitting_split_along(u, ffla::poly::evaluate(facs.front().factor, theta), a, b);
  }
  const std::uint32_t shifts = std::min<std::uint32_t>(f.q(), 16);
  for (std::uint32_t c = 0; c < shifts; ++c)
    if (fitting_split_along(u, theta.plus_scalar(f.neg(static_cast<Elem>(c))), a, b)) return true;
  return false;
}

}  // namespace

std::vector<Pim> decompose_projectives(const grp::GroupTable& t, const FieldPtr& f,
                                       const SimpleRegistry& reg, Rng& rng,
                                       const PimOptions& opt) {
  const std::size_t n = t.order();
  std::vector<std::optional<Pim>> found(reg.size());
  std::size_t remaining = reg.size();

  std::vector<Summand> work;
  work.push_back({grp::regular_module(t, f), Matrix::identity(f, n), Matrix::identity(f, n)});
  while (remaining > 0 && !work.empty()) {
    Summand u = std::move(work.back());
    work.pop_back();
    const auto head = head_multiplicities(u.module, reg);
    bool wanted = false;
    for (auto [i, m] : head) wanted = wanted || !found[i];
    if (!wanted) continue;
    if (head.size() == 1 && head.front().second == 1) {
      const std::size_t i = head.front().first;
      auto mod = std::make_shared<GModule>(*u.module);
      mod->label = "P(" + reg.label(i) + ")";
      found[i] = Pim{i, mod, std::move(u.inclusion), std::move(u.projection)};
      --remaining;
      continue;
    }
    Summand a, b;
    bool split = false;
    for (std::size_t trial = 0; trial < opt.budget && !split; ++trial)
      split = fitting_split(u, random_endomorphism(u, t, rng, opt), rng, opt, a, b);
    if (!split)
      fail(ErrorCode::kSplitBudgetExhausted,
           "no Fitting split of a " + std::to_string(u.module->dim) + "-dim summand within " +
               std::to_string(opt.budget) + " endomorphisms");
    work.push_back(std::move(b));
    work.push_back(std::move(a));
  }
  if (remaining > 0)
    fail(ErrorCode::kIncompleteRegistry, "regular module has no summand for some registry simple");

  std::vector<Pim> out;
  std::size_t total = 0;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    total += found[i]->module->dim * (reg.simple(i)->dim / reg.end_dim(i));
    out.push_back(std::move(*found[i]));
  }
  if (total != n)
    fail(ErrorCode::kIncompleteRegistry,
         "PIM dimensions account for " + std::to_string(total) + " of " + std::to_string(n));
  return out;
}

ModulePtr projective_from_labels(const std::vector<std::size_t>& labels,
                                 const std::vector<Pim>& pims) {
  if (labels.empty()) fail(ErrorCode::kInvalidArgument, "projective_from_labels: no summands");
  std::vector<ModulePtr> parts;
  std::string name;
  for (auto i : labels) {
    if (i >= pims.size()) fail(ErrorCode::kInvalidArgument, "PIM label out of range");
    parts.push_back(pims[i].module);
    name += (name.empty() ? "" : "+") + pims[i].module->label;
  }
  auto sum = std::make_shared<GModule>(*direct_sum(parts));
  sum->label = name;
  return sum;
}

Cover projective_cover(const ModulePtr& m, const std::vector<Pim>& pims,
                       const SimpleRegistry& reg) {
  if (m->dim == 0) fail(ErrorCode::kInvalidArgument, "projective_cover of the zero module");
  const auto head = head_multiplicities(m, reg);
  Submodule rad = radical(m, reg);
  ffla::EchelonBasis span(m->field, m->dim);
  for (std::size_t r = 0; r < rad.inclusion.matrix.rows(); ++r) span.add(rad.inclusion.matrix, r);

  std::vector<std::size_t> labels;
  Matrix cover(m->field, 0, m->dim);
  for (auto [i, mult] : head) {
    std::size_t picked = 0;
    for (const auto& h : hom_space(pims[i].module, m)) {
      if (picked == mult) break;
      const std::size_t before = span.size();
      for (std::size_t r = 0; r < h.matrix.rows(); ++r) span.add(h.matrix, r);
      if (span.size() == before) continue;
      labels.push_back(i);
      cover.append_rows(h.matrix);
      ++picked;
    }
    if (picked < mult)
      fail(ErrorCode::kCoverLiftFailed, "could not lift the head summands of " + reg.label(i));
  }
  if (span.size() != m->dim || ffla::rank(cover) != m->dim)
    fail(ErrorCode::kCoverLiftFailed, "assembled map is not surjective");
  ModulePtr p = projective_from_labels(labels, pims);
  return {p, labels, {p, m, std::move(cover)}};
}

}  // namespace lsl::modrep
