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
#include <string>
#include <unordered_map>
#include <vector>

#include "lsl/ffla/field.hpp"
#include "lsl/modrep/module.hpp"

namespace lsl::grp {

/// Permutation of [0, n) as an image array. Products read left to right:
/// (a * b)[x] = b[a[x]].
using Perm = std::vector<std::uint32_t>;

Perm perm_identity(std::size_t n);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& a);
bool is_permutation(const Perm& a, std::size_t degree);

struct GroupPresentation {
  std::string name;
  std::size_t degree = 0;
  std::vector<Perm> generators;
};

/// Throws kIngestion when a generator is not a bijection of [0, degree).
void validate(const GroupPresentation& g);

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

/// All elements in BFS order from the identity (element 0).
struct GroupTable {
  GroupPresentation presentation;
  std::vector<Perm> elements;
  /// right_mul[g][i] = index of elements[i] * generators[g].
  std::vector<std::vector<std::uint32_t>> right_mul;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;

  std::size_t order() const { return elements.size(); }
  std::size_t num_generators() const { return presentation.generators.size(); }
  std::uint32_t index_of(const Perm& p) const;
  std::uint32_t product(std::uint32_t a, std::uint32_t b) const;
  /// Index of the element represented by a word in the generators.
  std::uint32_t evaluate(const std::vector<std::size_t>& word) const;
};

/// BFS closure; throws kOrderLimitExceeded past max_order.
GroupTable enumerate(const GroupPresentation& g, std::size_t max_order = 10000);

/// Order of an element as a permutation.
std::uint64_t perm_order(const Perm& a);

/// Number of orbits of x -> x^q on the conjugacy classes of elements whose
/// order is prime to p. Over GF(q) this equals the number of isomorphism
/// classes of simple modules.
std::size_t simple_module_count(const GroupTable& t, std::uint32_t p, std::uint32_t q);

/// Right regular module: basis e_h, e_h * g = e_{hg}.
modrep::ModulePtr regular_module(const GroupTable& t, const ffla::FieldPtr& f);
/// Points as basis, generators act by their permutation matrices.
modrep::ModulePtr permutation_module(const GroupPresentation& g, const ffla::FieldPtr& f);

/// Left multiplication x -> a x on the regular module, with a given by
/// (element index, coefficient) pairs. Commutes with the right action.
ffla::Matrix left_multiplication(const GroupTable& t, const ffla::FieldPtr& f,
                                 const std::vector<std::pair<std::uint32_t, ffla::Elem>>& a);

/// Built-in catalog entry: a presentation plus its default coefficient field.
struct CatalogEntry {
  GroupPresentation group;
  std::uint32_t p = 2;
  std::uint32_t e = 1;
};

/// Names: "C<n>", "<p>:<q>" (alias "S3" for 3:2), "A4", "L3_2", "L3_3".
/// Throws kIngestion for unknown names.
CatalogEntry catalog(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace lsl::grp
