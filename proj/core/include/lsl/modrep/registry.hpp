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
#include <vector>

#include "lsl/grp/group.hpp"
#include "lsl/modrep/meataxe.hpp"
#include "lsl/modrep/module.hpp"

namespace lsl::modrep {

/// Pairwise non-isomorphic simple modules for one (G, k). Index 0 is always
/// the trivial module.
class SimpleRegistry {
 public:
  SimpleRegistry(FieldPtr field, std::size_t num_generators);

  std::size_t size() const { return simples_.size(); }
  const ModulePtr& simple(std::size_t i) const { return simples_[i]; }
  const std::vector<ModulePtr>& simples() const { return simples_; }
  /// dim_k End(S_i).
  std::size_t end_dim(std::size_t i) const { return end_dims_[i]; }
  const std::string& label(std::size_t i) const { return simples_[i]->label; }

  std::optional<std::size_t> find(const ModulePtr& s) const;
  /// Index of s, inserting it when new. s must be simple.
  std::size_t add(const ModulePtr& s);

  /// Set once every simple module of (G, k) is known to be present.
  bool complete() const { return complete_; }
  void set_complete(bool c) { complete_ = c; }
  /// Number of simples the group has over k, when known.
  std::optional<std::size_t> expected() const { return expected_; }
  void set_expected(std::size_t n) { expected_ = n; }

  /// Sorts the non-trivial simples by dimension (stable) and relabels them
  /// S1, S2, ... in that order.
  void canonicalize();

 private:
  FieldPtr field_;
  std::vector<ModulePtr> simples_;
  std::vector<std::size_t> end_dims_;
  bool complete_ = false;
  std::optional<std::size_t> expected_;
};

struct SimplesOptions {
  std::size_t regular_limit = 500;  // use the regular module as seed up to this order
  std::size_t tensor_limit = 2500;  // largest tensor product tried as extra seed
  MeataxeOptions meataxe;
};

/// Seeds: the regular module for small groups; otherwise the permutation
/// module, its dual and its tensor square.
std::vector<ModulePtr> default_seeds(const grp::GroupTable& t, const FieldPtr& f,
                                     const SimplesOptions& opt = {});

/// Chops every seed and collects the simples. When the registry is still
/// short of the number of simples predicted by the p-regular class count,
/// tensor products of the simples found so far are chopped as well.
SimpleRegistry simples(const grp::GroupTable& t, const FieldPtr& f,
                       const std::vector<ModulePtr>& seeds, Rng& rng,
                       const SimplesOptions& opt = {});

}  // namespace lsl::modrep
