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

#include "lsl/modrep/meataxe.hpp"

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"

namespace lsl::modrep {

namespace {

// Proper nonzero submodule of m from a proper submodule w of the transposed
// module: its annihilator.
Submodule annihilator_submodule(const ModulePtr& m, const Matrix& w) {
  return submodule_from_basis(m, ffla::kernel_basis(w));
}

}  // namespace

Matrix random_algebra_element(const GModule& m, Rng& rng, const MeataxeOptions& opt) {
  const ffla::Field& f = *m.field;
  const std::size_t terms = 1 + rng.below(opt.max_terms);
  Matrix theta(m.field, m.dim, m.dim);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::size_t len = 1 + rng.below(opt.max_word);
    Matrix w = m.action[rng.below(m.num_generators())];
    for (std::size_t i = 1; i < len; ++i) w = w * m.action[rng.below(m.num_generators())];
    const Elem c = static_cast<Elem>(1 + rng.below(f.q() - 1));
    for (std::size_t r = 0; r < m.dim; ++r) theta.add_row_multiple(r, c, w, r);
  }
  return theta;
}

SplitOutcome split(const ModulePtr& m, Rng& rng, const MeataxeOptions& opt) {
  if (m->dim == 0) fail(ErrorCode::kInvalidArgument, "split: zero module");
  if (m->dim == 1) {
    return {std::nullopt, IrreducibilityCertificate{Matrix::identity(m->field, 1), ffla::Poly{}}};
  }
  const ffla::Field& f = *m->field;
  std::vector<Matrix> transposed_action;
  for (const auto& a : m->action) transposed_action.push_back(a.transpose());

  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    Matrix theta = random_algebra_element(*m, rng, opt);
    ffla::Poly chi = ffla::poly::charpoly(theta);
    for (const auto& fac : ffla::poly::factor(f, chi, rng)) {
      const int deg = ffla::poly::degree(fac.factor);
      if (deg > opt.max_factor_degree) continue;
      Matrix ft = ffla::poly::evaluate(fac.factor, theta);
      Matrix ker = ffla::left_kernel(ft);
      if (ker.rows() == 0) continue;

      Matrix sub = spin_basis(m->action, ker.row(0));
      if (sub.rows() < m->dim) return {submodule_from_basis(m, sub), std::nullopt};

      if (ker.rows() == static_cast<std::size_t>(deg)) {
        Matrix kt = ffla::kernel_basis(ft);
        Matrix w = spin_basis(transposed_action, kt.row(0));
        if (w.rows() < m->dim) return {annihilator_submodule(m, w), std::nullopt};
        return {std::nullopt, IrreducibilityCertificate{std::move(theta), fac.factor}};
      }
      // Nullity too large for a proof; other kernel vectors may still split.
      for (std::size_t r = 1; r < ker.rows() && r < 8; ++r) {
        Matrix s2 = spin_basis(m->action, ker.row(r));
        if (s2.rows() < m->dim) return {submodule_from_basis(m, s2), std::nullopt};
      }
    }
  }
  fail(ErrorCode::kRandomnessExhausted,
       "meataxe found no verdict within " + std::to_string(opt.trials) + " trials (dim " +
           std::to_string(m->dim) + ")");
}

bool is_irreducible(const ModulePtr& m, Rng& rng, const MeataxeOptions& opt) {
  return !split(m, rng, opt).submodule.has_value();
}

std::vector<ModulePtr> composition_factors(const ModulePtr& m, Rng& rng,
                                           const MeataxeOptions& opt) {
  std::vector<ModulePtr> out;
  std::vector<ModulePtr> stack{m};
  while (!stack.empty()) {
    ModulePtr cur = stack.back();
    stack.pop_back();
    if (cur->dim == 0) continue;
    SplitOutcome s = split(cur, rng, opt);
    if (!s.submodule) {
      out.push_back(cur);
      continue;
    }
    Quotient q = quotient(cur, s.submodule->inclusion);
    stack.push_back(q.module);
    stack.push_back(s.submodule->module);
  }
  return out;
}

bool same_simple(const ModulePtr& a, const ModulePtr& b) {
  if (a->dim != b->dim) return false;
  if (a->dim == 0) return true;
  return !hom_space(a, b).empty();
}

std::vector<std::pair<ModulePtr, std::size_t>> chop(const ModulePtr& m, Rng& rng,
                                                    const MeataxeOptions& opt) {
  if (m->dim == 0) fail(ErrorCode::kInvalidArgument, "chop: zero module");
  std::vector<std::pair<ModulePtr, std::size_t>> classes;
  for (const auto& s : composition_factors(m, rng, opt)) {
    bool placed = false;
    for (auto& [rep, count] : classes)
      if (same_simple(rep, s)) {
        ++count;
        placed = true;
        break;
      }
    if (!placed) classes.emplace_back(s, 1);
  }
  return classes;
}

}  // namespace lsl::modrep
