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
#include <vector>

namespace lsl::series {

using Coeffs = std::vector<std::int64_t>;

/// numerator / prod_i (1 - t^{denominator[i]}), every factor >= 1.
struct RationalSeries {
  Coeffs numerator;
  std::vector<int> denominator;
};

/// Coefficients of degrees 0..max_degree.
Coeffs expand(const RationalSeries& s, std::size_t max_degree);

struct GrowthReport {
  int growth_degree = -1;
  int g_codimension = 0;
  bool fitted = false;  // true when estimated from a finite prefix
};

/// Pole order at t = 1 minus one, at least -1.
GrowthReport growth_degree(const RationalSeries& s);

/// Estimate from a prefix (length >= 8) by finite differences of the
/// partial sums. Heuristic.
GrowthReport fit_growth(const Coeffs& prefix);

struct BoundCheck {
  bool pass = true;
  std::optional<std::size_t> failing_degree;
};

/// Checks h_M <= h_N / (1 - t^|n|) coefficientwise on the common prefix and
/// reports the first violating degree.
BoundCheck growth_bound_check(const Coeffs& h_m, const Coeffs& h_n, int n);

/// Right-hand side of the bound above, truncated to the given length.
Coeffs growth_bound(const Coeffs& h_n, int n, std::size_t length);

struct CIPresentation {
  std::vector<int> generators;  // codegrees |x_i| >= 1
  std::vector<int> relations;   // codegrees |f_j| >= 3
};

/// prod (1 + t^{|x_i|-1}) / prod (1 - t^{|f_j|-2}); valid when the
/// Eilenberg-Moore spectral sequence collapses.
RationalSeries ci_loop_series(const CIPresentation& p);

/// prod (1 - t^{|f_j|}) / prod (1 - t^{|x_i|}).
RationalSeries ci_cohomology_series(const CIPresentation& p);

struct PrefixComparison {
  bool match = true;
  std::optional<std::size_t> mismatch_degree;
};

/// Exact comparison on degrees [from, to]; both must cover the range.
PrefixComparison compare_prefix(const Coeffs& a, const Coeffs& b, std::size_t from, std::size_t to);

/// Product of two polynomials.
Coeffs poly_mul(const Coeffs& a, const Coeffs& b);

}  // namespace lsl::series
