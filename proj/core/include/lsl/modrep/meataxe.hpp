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
#include <utility>
#include <vector>

#include "lsl/ffla/poly.hpp"
#include "lsl/modrep/module.hpp"
#include "lsl/rng.hpp"

namespace lsl::modrep {

struct MeataxeOptions {
  std::size_t trials = 200;     // random algebra elements per split attempt
  std::size_t max_word = 6;     // word length in the generators
  std::size_t max_terms = 4;    // words per random linear combination
  int max_factor_degree = 32;   // skip charpoly factors above this
};

/// Evidence that a module is simple: theta = f-kernel element for which both
/// spin tests succeeded with nullity(f(theta)) == deg f.
struct IrreducibilityCertificate {
  Matrix theta;
  ffla::Poly factor;
};

struct SplitOutcome {
  std::optional<Submodule> submodule;  // proper nonzero submodule, if found
  std::optional<IrreducibilityCertificate> certificate;
};

/// A random element of the algebra spanned by the action matrices.
Matrix random_algebra_element(const GModule& m, Rng& rng, const MeataxeOptions& opt = {});

/// One meataxe run: either a proper submodule or a proof of simplicity.
/// Throws kRandomnessExhausted after opt.trials elements without a verdict.
SplitOutcome split(const ModulePtr& m, Rng& rng, const MeataxeOptions& opt = {});

bool is_irreducible(const ModulePtr& m, Rng& rng, const MeataxeOptions& opt = {});

/// Composition factors with repetition, in the order they are peeled off.
std::vector<ModulePtr> composition_factors(const ModulePtr& m, Rng& rng,
                                           const MeataxeOptions& opt = {});

/// Isomorphism of two simple modules.
bool same_simple(const ModulePtr& a, const ModulePtr& b);

/// Jordan-Holder multiset: one representative per isomorphism class with its
/// multiplicity, classes in order of first appearance.
std::vector<std::pair<ModulePtr, std::size_t>> chop(const ModulePtr& m, Rng& rng,
                                                    const MeataxeOptions& opt = {});

}  // namespace lsl::modrep
