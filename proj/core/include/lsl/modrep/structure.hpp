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

#include <utility>
#include <vector>

#include "lsl/modrep/registry.hpp"

namespace lsl::modrep {

/// Throws kIncompleteRegistry when m has a composition factor missing from
/// reg. A no-op for complete registries.
void require_factors_known(const ModulePtr& m, const SimpleRegistry& reg);

/// Intersection of the kernels of all maps m -> S, S in the registry.
Submodule radical(const ModulePtr& m, const SimpleRegistry& reg);

/// Sum of the images of all maps S -> m.
Submodule socle(const ModulePtr& m, const SimpleRegistry& reg);

/// (registry index, multiplicity) for each simple in the head of m, in
/// registry order; zero multiplicities are omitted.
std::vector<std::pair<std::size_t, std::size_t>> head_multiplicities(const ModulePtr& m,
                                                                    const SimpleRegistry& reg);

/// Radical layers of m from the top: multiplicities of each registry simple
/// in rad^i m / rad^(i+1) m.
std::vector<std::vector<std::pair<std::size_t, std::size_t>>> radical_layers(
    const ModulePtr& m, const SimpleRegistry& reg);

}  // namespace lsl::modrep
