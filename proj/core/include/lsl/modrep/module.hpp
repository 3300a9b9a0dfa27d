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

#include <memory>
#include <string>
#include <vector>

#include "lsl/ffla/linalg.hpp"
#include "lsl/ffla/matrix.hpp"

namespace lsl::modrep {

using ffla::Elem;
using ffla::FieldPtr;
using ffla::Matrix;

/// Finite-dimensional right kG-module: vectors are rows and generator g
/// acts by v -> v * action[g].
struct GModule {
  FieldPtr field;
  std::size_t dim = 0;
  std::vector<Matrix> action;
  std::string label;

  std::size_t num_generators() const { return action.size(); }
};

using ModulePtr = std::shared_ptr<const GModule>;

/// Equivariant linear map, v -> v * matrix (dim source x dim target).
struct ModuleMap {
  ModulePtr source;
  ModulePtr target;
  Matrix matrix;
};

/// Validates shapes and invertibility of the action matrices.
ModulePtr make_module(FieldPtr field, std::vector<Matrix> action, std::string label = {});
ModulePtr trivial_module(FieldPtr field, std::size_t num_generators);
ModulePtr zero_module(FieldPtr field, std::size_t num_generators);

/// action_g(source) * matrix == matrix * action_g(target) for every g.
bool is_equivariant(const ModuleMap& f);
ModuleMap compose(const ModuleMap& first, const ModuleMap& second);
ModuleMap identity_map(const ModulePtr& m);

struct Submodule {
  ModulePtr module;
  ModuleMap inclusion;  // rows are an rref basis inside the parent
};

struct Quotient {
  ModulePtr module;
  ModuleMap projection;
};

/// Submodule spanned by the rows of basis; kNotSubmodule if not invariant.
Submodule submodule_from_basis(const ModulePtr& m, const Matrix& basis);

/// Quotient on the complement spanned by the non-pivot unit vectors of the
/// image's rref basis; kNotSubmodule if sub is not equivariant.
Quotient quotient(const ModulePtr& m, const ModuleMap& sub);

/// Smallest submodule containing the rows of vectors.
Submodule spin(const ModulePtr& m, const Matrix& vectors);
/// Closure of the rows of vectors under the given matrices, as an rref basis.
Matrix spin_basis(const std::vector<Matrix>& gens, const Matrix& vectors);

Submodule kernel(const ModuleMap& f);
Submodule image(const ModuleMap& f);

ModulePtr direct_sum(const std::vector<ModulePtr>& parts);
ModulePtr tensor(const ModulePtr& a, const ModulePtr& b);
ModulePtr dual(const ModulePtr& a);
/// Action by transposed matrices; submodules of it are annihilators of
/// quotients of m.
ModulePtr transposed(const ModulePtr& a);

/// Matrix of a group word, generators indexed into action.
Matrix word_matrix(const GModule& m, const std::vector<std::size_t>& word);

}  // namespace lsl::modrep
