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

#include <optional>
#include <string>

#include "lsl/modrep/meataxe.hpp"
#include "lsl/modrep/module.hpp"

namespace lsl::modrep {

enum class IsoVerdict { kYes, kNo, kUnknown };

std::string iso_verdict_name(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::kUnknown;
  std::optional<Matrix> witness;  // invertible equivariant map when kYes
};

struct IsoOptions {
  std::size_t random_budget = 500;
  std::size_t exhaustive_basis = 12;  // exhaustive search up to this many hom basis elements
  std::uint32_t exhaustive_q = 4;     // ... over fields this small
  MeataxeOptions meataxe;
};

/// True when the two composition-factor multisets agree.
bool same_composition_factors(const ModulePtr& a, const ModulePtr& b, Rng& rng,
                              const MeataxeOptions& opt = {});

IsoResult is_isomorphic(const ModulePtr& m, const ModulePtr& n, Rng& rng,
                        const IsoOptions& opt = {});

}  // namespace lsl::modrep
