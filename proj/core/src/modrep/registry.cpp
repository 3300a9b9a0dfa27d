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

#include "lsl/modrep/registry.hpp"

#include <algorithm>
#include <numeric>

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"

namespace lsl::modrep {

namespace {

ModulePtr relabel(const ModulePtr& m, std::string label) {
  auto copy = std::make_shared<GModule>(*m);
  copy->label = std::move(label);
  return copy;
}

}  // namespace

SimpleRegistry::SimpleRegistry(FieldPtr field, std::size_t num_generators)
    : field_(std::move(field)) {
  simples_.push_back(relabel(trivial_module(field_, num_generators), "k"));
  end_dims_.push_back(1);
}

std::optional<std::size_t> SimpleRegistry::find(const ModulePtr& s) const {
  for (std::size_t i = 0; i < simples_.size(); ++i)
    if (same_simple(simples_[i], s)) return i;
  return std::nullopt;
}

std::size_t SimpleRegistry::add(const ModulePtr& s) {
  if (auto i = find(s)) return *i;
  const std::size_t end = hom_space(s, s).size();
  simples_.push_back(relabel(s, "S" + std::to_string(simples_.size())));
  end_dims_.push_back(end);
  return simples_.size() - 1;
}

void SimpleRegistry::canonicalize() {
  std::vector<std::size_t> order(simples_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin() + 1, order.end(), [&](std::size_t a, std::size_t b) {
    return simples_[a]->dim < simples_[b]->dim;
  });
  std::vector<ModulePtr> s;
  std::vector<std::size_t> e;
  for (std::size_t i = 0; i < order.size(); ++i) {
    s.push_back(i == 0 ? simples_[order[i]] : relabel(simples_[order[i]], "S" + std::to_string(i)));
    e.push_back(end_dims_[order[i]]);
  }
  simples_ = std::move(s);
  end_dims_ = std::move(e);
}

std::vector<ModulePtr> default_seeds(const grp::GroupTable& t, const FieldPtr& f,
                                     const SimplesOptions& opt) {
  if (t.order() <= opt.regular_limit) return {grp::regular_module(t, f)};
  ModulePtr perm = grp::permutation_module(t.presentation, f);
  return {perm, dual(perm), tensor(perm, perm)};
}

SimpleRegistry simples(const grp::GroupTable& t, const FieldPtr& f,
                       const std::vector<ModulePtr>& seeds, Rng& rng, const SimplesOptions& opt) {
  if (seeds.empty()) fail(ErrorCode::kInvalidArgument, "simples: no seed modules");
  SimpleRegistry reg(f, t.num_generators());
  reg.set_expected(grp::simple_module_count(t, f->p(), f->q()));
  auto full = [&] { return reg.size() >= *reg.expected(); };

  for (const auto& seed : seeds) {
    if (full()) break;
    for (const auto& [s, mult] : chop(seed, rng, opt.meataxe)) reg.add(s);
  }
  // Tensor products of known simples, smallest first.
  for (std::size_t round = 0; !full() && round < 4; ++round) {
    const std::size_t before = reg.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i < before; ++i)
      for (std::size_t j = i; j < before; ++j)
        if (reg.simple(i)->dim * reg.simple(j)->dim <= opt.tensor_limit) pairs.emplace_back(i, j);
    std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
      return reg.simple(a.first)->dim * reg.simple(a.second)->dim <
             reg.simple(b.first)->dim * reg.simple(b.second)->dim;
    });
    for (auto [i, j] : pairs) {
      if (full()) break;
      for (const auto& [s, mult] : chop(tensor(reg.simple(i), reg.simple(j)), rng, opt.meataxe)) reg.add(s);
    }
    if (reg.size() == before) break;
  }
  reg.set_complete(full());
  reg.canonicalize();
  return reg;
}

}  // namespace lsl::modrep
