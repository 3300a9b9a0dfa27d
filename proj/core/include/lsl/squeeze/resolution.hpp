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

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lsl/modrep/iso.hpp"
#include "lsl/modrep/projective.hpp"
#include "lsl/modrep/registry.hpp"

namespace lsl::squeeze {

using modrep::Matrix;
using modrep::ModuleMap;
using modrep::ModulePtr;
using modrep::Pim;
using modrep::SimpleRegistry;
using modrep::Submodule;

enum class ResolutionKind { kSqueezed, kMinimal };
enum class TruncationReason { kCompleted, kStepLimit, kDimLimit };

std::string kind_name(ResolutionKind k);
std::string reason_name(TruncationReason r);

struct Limits {
  std::size_t max_steps = 20;    // highest homological degree computed
  std::size_t max_dim = 20000;   // largest projective term built
};

struct Truncation {
  std::size_t steps = 0;  // index of the last computed term
  TruncationReason reason = TruncationReason::kStepLimit;
};

/// P_i with differentials d_i : P_i -> P_{i-1}, where P_{-1} = k and d_0 is
/// the cover P(k) -> k. syzygies[i] = ker d_i inside P_i; for the squeezed
/// kind cores[i] is the trivial core of syzygies[i], as a submodule of it.
struct Resolution {
  ResolutionKind kind = ResolutionKind::kSqueezed;
  std::vector<ModulePtr> terms;
  std::vector<std::vector<std::size_t>> labels;
  std::vector<ModuleMap> differentials;
  std::vector<Submodule> syzygies;
  std::vector<Submodule> cores;
  Truncation truncation;

  std::size_t length() const { return terms.size(); }
  /// The module periodicity is tested on: M_i (squeezed) or N_i (minimal).
  const ModulePtr& syzygy_module(std::size_t i) const {
    return kind == ResolutionKind::kSqueezed ? cores[i].module : syzygies[i].module;
  }
  /// Rows of the submodule the next cover maps onto, inside P_i.
  Matrix image_in_term(std::size_t i) const;
};

/// Smallest submodule M of n with every composition factor of n/M trivial:
/// kernels of all maps to k are intersected until none are left.
Submodule trivial_core(const ModulePtr& n);

Resolution squeezed_resolution(const SimpleRegistry& reg, const std::vector<Pim>& pims,
                               const Limits& limits = {});
Resolution minimal_resolution(const SimpleRegistry& reg, const std::vector<Pim>& pims,
                              const Limits& limits = {});

/// Continues a truncated resolution in place up to the new limits.
void extend(Resolution& r, const SimpleRegistry& reg, const std::vector<Pim>& pims,
            const Limits& limits);

/// Rebuilds a stored prefix: terms from the PIM labels, the given
/// differential matrices (checked for equivariance and d∘d = 0), syzygies
/// and cores recomputed. Throws kInvalidArgument on an inconsistent file.
Resolution restore(ResolutionKind kind, const std::vector<std::vector<std::size_t>>& labels,
                   const std::vector<Matrix>& differentials, const SimpleRegistry& reg,
                   const std::vector<Pim>& pims, TruncationReason reason);

struct DimSequence {
  std::vector<std::int64_t> dims;
  std::string provenance;  // squeezed_homology | cohomology | predicted
};

/// dims[0] = dim P_0 - dim M_0, dims[i] = dim N_i - dim M_i.
DimSequence squeezed_homology(const Resolution& r);

/// dims[n] = dim Hom(P_n, k).
DimSequence cohomology_dims(const Resolution& r, const SimpleRegistry& reg);

/// N_i / M_i, whose composition factors are all trivial.
ModulePtr homology_subquotient(const Resolution& r, std::size_t i);

struct PeriodicityCertificate {
  std::size_t offset = 0;
  std::size_t period = 0;
  Matrix witness;  // syzygy(offset) -> syzygy(offset + period)
  std::pair<std::size_t, std::size_t> verified_range;  // offsets checked, inclusive
};

struct PeriodicityResult {
  std::optional<PeriodicityCertificate> certificate;
  /// Pairs (i, j) whose isomorphism test came back Unknown.
  std::vector<std::pair<std::size_t, std::size_t>> unknown;
};

/// Least (k0, d), ordered by k0 then d, with syzygy(i) ≅ syzygy(i + d) for
/// every computed i >= k0; d <= max_period.
PeriodicityResult detect_periodicity(const Resolution& r, std::size_t max_period, Rng& rng,
                                     const modrep::IsoOptions& opt = {});

/// Independent re-check of a certificate witness.
bool verify_certificate(const Resolution& r, const PeriodicityCertificate& c);

}  // namespace lsl::squeeze
