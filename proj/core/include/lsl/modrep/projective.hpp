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

#include <vector>

#include "lsl/grp/group.hpp"
#include "lsl/modrep/registry.hpp"

namespace lsl::modrep {

/// Projective indecomposable summand of kG with head S_simple.
struct Pim {
  std::size_t simple = 0;
  ModulePtr module;
  Matrix inclusion;   // dim P x |G|, rows in kG
  Matrix projection;  // |G| x dim P, projection * inclusion-rows = identity on P
};

struct PimOptions {
  std::size_t budget = 200;   // random endomorphisms tried per summand
  std::size_t terms = 6;      // group elements per random algebra element
  std::size_t charpoly_limit = 400;  // larger summands split along x - c only
};

/// Splits the regular module by Fitting decompositions of random
/// endomorphisms until one summand per registry simple has a simple head.
/// Result is indexed by registry order. Throws kSplitBudgetExhausted.
std::vector<Pim> decompose_projectives(const grp::GroupTable& t, const FieldPtr& f,
                                       const SimpleRegistry& reg, Rng& rng,
                                       const PimOptions& opt = {});

/// Projective cover with summands ordered by registry index.
struct Cover {
  ModulePtr projective;
  std::vector<std::size_t> labels;  // registry index of each summand
  ModuleMap map;                    // surjection projective -> m
};

/// Throws kCoverLiftFailed when no surjection is assembled from the hom
/// bases, which means the registry or PIM list does not fit m.
Cover projective_cover(const ModulePtr& m, const std::vector<Pim>& pims,
                       const SimpleRegistry& reg);

/// Direct sum of PIMs with the given labels, in that order.
ModulePtr projective_from_labels(const std::vector<std::size_t>& labels,
                                 const std::vector<Pim>& pims);

}  // namespace lsl::modrep
