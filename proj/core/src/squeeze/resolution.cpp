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

#include "lsl/squeeze/resolution.hpp"

#include <map>

#include "lsl/error.hpp"
#include "lsl/modrep/hom.hpp"
#include "lsl/modrep/structure.hpp"

namespace lsl::squeeze {

using modrep::GModule;

std::string kind_name(ResolutionKind k) {
  return k == ResolutionKind::kSqueezed ? "squeezed" : "minimal";
}

std::string reason_name(TruncationReason r) {
  switch (r) {
    case TruncationReason::kCompleted: return "completed";
    case TruncationReason::kStepLimit: return "step_limit";
    case TruncationReason::kDimLimit: return "dim_limit";
  }
  return "step_limit";
}

Matrix Resolution::image_in_term(std::size_t i) const {
  const Matrix& n = syzygies[i].inclusion.matrix;
  return kind == ResolutionKind::kSqueezed ? cores[i].inclusion.matrix * n : n;
}

Submodule trivial_core(const ModulePtr& n) {
  Submodule cur = modrep::submodule_from_basis(n, Matrix::identity(n->field, n->dim));
  for (;;) {
    if (cur.module->dim == 0) return cur;
    Matrix f = modrep::fixed_functionals(*cur.module);
    if (f.rows() == 0) return cur;
    Submodule next = modrep::submodule_from_basis(cur.module, ffla::kernel_basis(f));
    Matrix incl = next.inclusion.matrix * cur.inclusion.matrix;
    cur = modrep::submodule_from_basis(n, incl);
  }
}

namespace {

// Syzygy and core of the last term.
void close_term(Resolution& r) {
  const std::size_t i = r.terms.size() - 1;
  r.syzygies.push_back(modrep::kernel(r.differentials[i]));
  if (r.kind == ResolutionKind::kSqueezed) r.cores.push_back(trivial_core(r.syzygies[i].module));
}

std::size_t cover_dim(const ModulePtr& m, const SimpleRegistry& reg, const std::vector<Pim>& pims) {
  std::size_t d = 0;
  for (auto [i, mult] : modrep::head_multiplicities(m, reg)) d += mult * pims[i].module->dim;
  return d;
}

Resolution start(ResolutionKind kind, const SimpleRegistry& reg, const std::vector<Pim>& pims) {
  Resolution r;
  r.kind = kind;
  modrep::Cover c = modrep::projective_cover(reg.simple(0), pims, reg);
  r.terms.push_back(c.projective);
  r.labels.push_back(c.labels);
  r.differentials.push_back(c.map);
  close_term(r);
  r.truncation = {0, TruncationReason::kStepLimit};
  return r;
}

}  // namespace

void extend(Resolution& r, const SimpleRegistry& reg, const std::vector<Pim>& pims,
            const Limits& limits) {
  for (;;) {
    const std::size_t i = r.terms.size() - 1;
    r.truncation.steps = i;
    const ModulePtr& next = r.syzygy_module(i);
    if (next->dim == 0) {
      r.truncation.reason = TruncationReason::kCompleted;
      return;
    }
    if (i >= limits.max_steps) {
      r.truncation.reason = TruncationReason::kStepLimit;
      return;
    }
    if (cover_dim(next, reg, pims) > limits.max_dim) {
      r.truncation.reason = TruncationReason::kDimLimit;
      return;
    }
    modrep::Cover c = modrep::projective_cover(next, pims, reg);
    Matrix d = c.map.matrix * r.image_in_term(i);
    r.terms.push_back(c.projective);
    r.labels.push_back(c.labels);
    r.differentials.push_back({c.projective, r.terms[i], std::move(d)});
    close_term(r);
  }
}

Resolution squeezed_resolution(const SimpleRegistry& reg, const std::vector<Pim>& pims,
                               const Limits& limits) {
  Resolution r = start(ResolutionKind::kSqueezed, reg, pims);
  extend(r, reg, pims, limits);
  return r;
}

Resolution minimal_resolution(const SimpleRegistry& reg, const std::vector<Pim>& pims,
                              const Limits& limits) {
  Resolution r = start(ResolutionKind::kMinimal, reg, pims);
  extend(r, reg, pims, limits);
  return r;
}

Resolution restore(ResolutionKind kind, const std::vector<std::vector<std::size_t>>& labels,
                   const std::vector<Matrix>& differentials, const SimpleRegistry& reg,
                   const std::vector<Pim>& pims, TruncationReason reason) {
  if (labels.empty() || labels.size() != differentials.size())
    fail(ErrorCode::kInvalidArgument, "stored resolution: label and differential counts differ");
  Resolution r;
  r.kind = kind;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ModulePtr p = modrep::projective_from_labels(labels[i], pims);
    ModulePtr target = i == 0 ? reg.simple(0) : r.terms[i - 1];
    ModuleMap d{p, target, differentials[i]};
    if (!modrep::is_equivariant(d))
      fail(ErrorCode::kInvalidArgument, "stored differential " + std::to_string(i) + " is not equivariant");
    if (i > 0 && !(d.matrix * r.differentials[i - 1].matrix).is_zero())
      fail(ErrorCode::kInvalidArgument, "stored differentials do not compose to zero at " + std::to_string(i));
    r.terms.push_back(p);
    r.labels.push_back(labels[i]);
    r.differentials.push_back(std::move(d));
    close_term(r);
    if (i > 0 && ffla::rank(r.differentials[i].matrix) != r.syzygy_module(i - 1)->dim)
      fail(ErrorCode::kInvalidArgument, "stored differential " + std::to_string(i) + " has the wrong image");
  }
  r.truncation = {labels.size() - 1, reason};
  return r;
}

DimSequence squeezed_homology(const Resolution& r) {
  if (r.kind != ResolutionKind::kSqueezed)
    fail(ErrorCode::kInvalidArgument, "squeezed_homology needs a squeezed resolution");
  DimSequence s{{}, "squeezed_homology"};
  for (std::size_t i = 0; i < r.length(); ++i) {
    const std::size_t top = i == 0 ? r.terms[0]->dim : r.syzygies[i].module->dim;
    s.dims.push_back(static_cast<std::int64_t>(top - r.cores[i].module->dim));
  }
  return s;
}

DimSequence cohomology_dims(const Resolution& r, const SimpleRegistry& reg) {
  if (r.kind != ResolutionKind::kMinimal)
    fail(ErrorCode::kInvalidArgument, "cohomology_dims needs a minimal resolution");
  DimSequence s{{}, "cohomology"};
  for (const auto& l : r.labels) {
    std::int64_t count = 0;
    for (auto i : l) count += i == 0 ? static_cast<std::int64_t>(reg.end_dim(0)) : 0;
    s.dims.push_back(count);
  }
  return s;
}

ModulePtr homology_subquotient(const Resolution& r, std::size_t i) {
  if (r.kind != ResolutionKind::kSqueezed)
    fail(ErrorCode::kInvalidArgument, "homology_subquotient needs a squeezed resolution");
  if (i == 0)
    return modrep::quotient(r.terms[0], {r.cores[0].module, r.terms[0], r.image_in_term(0)}).module;
  return modrep::quotient(r.syzygies[i].module, r.cores[i].inclusion).module;
}

PeriodicityResult detect_periodicity(const Resolution& r, std::size_t max_period, Rng& rng,
                                     const modrep::IsoOptions& opt) {
  PeriodicityResult out;
  const std::size_t last = r.length() - 1;
  std::map<std::pair<std::size_t, std::size_t>, modrep::IsoResult> memo;
  auto test = [&](std::size_t i, std::size_t j) -> const modrep::IsoResult& {
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    auto res = modrep::is_isomorphic(r.syzygy_module(i), r.syzygy_module(j), rng, opt);
    if (res.verdict == modrep::IsoVerdict::kUnknown) out.unknown.emplace_back(i, j);
    return memo.emplace(std::make_pair(i, j), std::move(res)).first->second;
  };
  for (std::size_t k0 = 0; k0 < last; ++k0) {
    for (std::size_t d = 1; d <= max_period && k0 + d <= last; ++d) {
      const auto& first = test(k0, k0 + d);
      if (first.verdict != modrep::IsoVerdict::kYes) continue;
      bool all = true;
      for (std::size_t i = k0 + 1; i + d <= last && all; ++i)
        all = test(i, i + d).verdict == modrep::IsoVerdict::kYes;
      if (!all) continue;
      out.certificate = PeriodicityCertificate{k0, d, *memo.at({k0, k0 + d}).witness,
                                               {k0, last - d}};
      return out;
    }
  }
  return out;
}

bool verify_certificate(const Resolution& r, const PeriodicityCertificate& c) {
  if (c.offset + c.period >= r.length() || c.period == 0) return false;
  const ModulePtr& a = r.syzygy_module(c.offset);
  const ModulePtr& b = r.syzygy_module(c.offset + c.period);
  if (a->dim != b->dim) return false;
  if (c.witness.rows() != a->dim || c.witness.cols() != b->dim) return false;
  return ffla::is_invertible(c.witness) && modrep::is_equivariant({a, b, c.witness});
}

}  // namespace lsl::squeeze
