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

#include "lsl/ffla/matrix.hpp"
#include "lsl/rng.hpp"

namespace lsl::ffla {

/// Univariate polynomial over a finite field, coefficients lowest degree
/// first, no trailing zeros (the zero polynomial is empty).
using Poly = std::vector<Elem>;

namespace poly {

void trim(Poly& a);
int degree(const Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
/// Quotient and remainder; b nonzero.
std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly gcd(const Field& f, Poly a, Poly b);
Poly derivative(const Field& f, const Poly& a);
/// base^k mod m.
Poly powmod(const Field& f, const Poly& base, std::uint64_t k, const Poly& m);

/// Characteristic polynomial det(xI - a), monic, via Hessenberg reduction.
Poly charpoly(const Matrix& a);

/// f(a) for a square matrix.
Matrix evaluate(const Poly& f, const Matrix& a);

struct Factor {
  Poly factor;  // monic irreducible
  int multiplicity;
};

/// Factorization of a nonzero polynomial into monic irreducibles, sorted by
/// degree then coefficients. Randomized (Cantor-Zassenhaus); the result does
/// not depend on the draws.
std::vector<Factor> factor(const Field& f, const Poly& a, Rng& rng);

}  // namespace poly
}  // namespace lsl::ffla
