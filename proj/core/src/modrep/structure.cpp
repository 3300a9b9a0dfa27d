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

#include "lsl/modrep/structure.hpp"

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"

namespace lsl::modrep {

void require_factors_known(const ModulePtr& m, const SimpleRegistry& reg) {
  if (reg.complete() || m->dim == 0) return;
  Rng rng(0x51e7e);  // fixed: the verdict does not depend on the draws
  for (const auto& [s, mult] : chop(m, rng))
    if (!reg.find(s))
      fail(ErrorCode::kIncompleteRegistry,
           "module has a " + std::to_string(s->dim) + "-dim composition factor missing from the registry");
}

Submodule radical(const ModulePtr& m, const SimpleRegistry& reg) {
  require_factors_known(m, reg);
  Matrix all(m->field, m->dim, 0);
  for (const auto& s : reg.simples())
    for (const auto& f : hom_space(m, s)) all = Matrix::concat(all, f.matrix);
  if (all.cols() == 0) return submodule_from_basis(m, Matrix::identity(m->field, m->dim));
  return submodule_from_basis(m, ffla::left_kernel(all));
}

Submodule socle(const ModulePtr& m, const SimpleRegistry& reg) {
  require_factors_known(m, reg);
  Matrix images(m->field, 0, m->dim);
  for (const auto& s : reg.simples())
    for (const auto& f : hom_space(s, m)) images.append_rows(f.matrix);
  return submodule_from_basis(m, ffla::row_basis(images));
}

std::vector<std::pair<std::size_t, std::size_t>> head_multiplicities(const ModulePtr& m,
                                                                    const SimpleRegistry& reg) {
  require_factors_known(m, reg);
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const std::size_t h = hom_space(m, reg.simple(i)).size();
    if (h % reg.end_dim(i) != 0) fail(ErrorCode::kInternal, "hom dimension not a multiple of End(S)");
    if (h) out.emplace_back(i, h / reg.end_dim(i));
  }
  return out;
}

std::vector<std::vector<std::pair<std::size_t, std::size_t>>> radical_layers(
    const ModulePtr& m, const SimpleRegistry& reg) {
  require_factors_known(m, reg);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> layers;
  ModulePtr cur = m;
  while (cur->dim > 0) {
    layers.push_back(head_multiplicities(cur, reg));
    Submodule rad = radical(cur, reg);
    if (rad.module->dim == cur->dim) fail(ErrorCode::kInternal, "radical did not shrink");
    cur = rad.module;
  }
  return layers;
}

}  // namespace lsl::modrep
