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

#include "lsl/modrep/module.hpp"

namespace lsl::modrep {

/// Basis of Hom_kG(m, n).
///
/// m is spun from a few standard basis vectors; a map is fixed by the images
/// of those generators, and every relation met while spinning cuts the
/// solution space down. The linear system never has more than
/// (#generators * dim n) unknowns.
std::vector<ModuleMap> hom_space(const ModulePtr& m, const ModulePtr& n);

/// Hom_kG(m, k) as columns: rows x with action_g x^T = x^T for all g.
Matrix fixed_functionals(const GModule& m);

/// Hom_kG(k, m) as rows: vectors fixed by every generator.
Matrix fixed_vectors(const GModule& m);

}  // namespace lsl::modrep
