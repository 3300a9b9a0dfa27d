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

#include "lsl/modrep/iso.hpp"

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"

namespace lsl::modrep {

std::string iso_verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::kYes: return "yes";
    case IsoVerdict::kNo: return "no";
    case IsoVerdict::kUnknown: return "unknown";
  }
  return "unknown";
}

bool same_composition_factors(const ModulePtr& a, const ModulePtr& b, Rng& rng,
                              const MeataxeOptions& opt) {
  if (a->dim != b->dim) return false;
  if (a->dim == 0) return true;
  auto ca = chop(a, rng, opt);
  auto cb = chop(b, rng, opt);
  if (ca.size() != cb.size()) return false;
  std::vector<bool> used(cb.size(), false);
  for (const auto& [s, mult] : ca) {
    bool matched = false;
    for (std::size_t j = 0; j < cb.size() && !matched; ++j)
      if (!used[j] && cb[j].second == mult && same_simple(s, cb[j].first)) matched = used[j] = true;
    if (!matched) return false;
  }
  return true;
}

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n, Rng& rng, const IsoOptions& opt) {
  if (m->num_generators() != n->num_generators())
    fail(ErrorCode::kInvalidArgument, "is_isomorphic: modules for different groups");
  if (m->dim != n->dim) return {IsoVerdict::kNo, std::nullopt};
  if (m->dim == 0) return {IsoVerdict::kYes, Matrix(m->field, 0, 0)};
  if (!same_composition_factors(m, n, rng, opt.meataxe)) return {IsoVerdict::kNo, std::nullopt};

  const auto basis = hom_space(m, n);
  if (basis.empty()) return {IsoVerdict::kNo, std::nullopt};
  for (const auto& h : basis)
    if (ffla::is_invertible(h.matrix)) return {IsoVerdict::kYes, h.matrix};

  const ffla::Field& f = *m->field;
  const std::size_t b = basis.size();
  if (b <= opt.exhaustive_basis && f.q() <= opt.exhaustive_q) {
    // Odometer over all coefficient vectors, updating the sum one digit at a time.
    std::vector<Elem> digits(b, 0);
    Matrix cur(m->field, m->dim, m->dim);
    for (;;) {
      std::size_t i = 0;
      for (; i < b; ++i) {
        // Advance digit i from d to d+1 (in code order), wrapping to 0.
        const Elem d = digits[i];
        const Elem next = static_cast<Elem>(d + 1u == f.q() ? 0 : d + 1);
        const Elem delta = f.sub(next, d);
        for (std::size_t r = 0; r < cur.rows(); ++r) cur.add_row_multiple(r, delta, basis[i].matrix, r);
        digits[i] = next;
        if (next != 0) break;
      }
      if (i == b) break;
      if (ffla::is_invertible(cur)) return {IsoVerdict::kYes, cur};
    }
    return {IsoVerdict::kNo, std::nullopt};
  }

  for (std::size_t trial = 0; trial < opt.random_budget; ++trial) {
    Matrix cur(m->field, m->dim, m->dim);
    for (const auto& h : basis) {
      const Elem c = static_cast<Elem>(rng.below(f.q()));
      if (c)
        for (std::size_t r = 0; r < cur.rows(); ++r) cur.add_row_multiple(r, c, h.matrix, r);
    }
    if (ffla::is_invertible(cur)) return {IsoVerdict::kYes, cur};
  }
  return {IsoVerdict::kUnknown, std::nullopt};
}

}  // namespace lsl::modrep
