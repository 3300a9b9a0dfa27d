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

#include "lsl/series/series.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "lsl/error.hpp"

namespace lsl::series {

namespace {

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Multiplicity of t = 1 as a root.
int root_one_multiplicity(Coeffs a) {
  trim(a);
  if (a.empty()) return 0;
  int m = 0;
  for (;;) {
    std::int64_t sum = 0;
    for (auto c : a) sum += c;
    if (sum != 0) return m;
    // Synthetic division by (t - 1), highest degree first.
    Coeffs q(a.size() - 1);
    std::int64_t carry = 0;
    for (std::size_t i = a.size(); i-- > 1;) {
      carry += a[i];
      q[i - 1] = carry;
    }
    a = std::move(q);
    trim(a);
    ++m;
  }
}

}  // namespace

Coeffs poly_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Coeffs expand(const RationalSeries& s, std::size_t max_degree) {
  Coeffs c(max_degree + 1, 0);
  for (std::size_t i = 0; i < s.numerator.size() && i <= max_degree; ++i) c[i] = s.numerator[i];
  for (int n : s.denominator) {
    if (n < 1) fail(ErrorCode::kInvalidArgument, "denominator factor must be positive");
    // Multiplying by 1/(1 - t^n) is a prefix sum with stride n.
    for (std::size_t i = static_cast<std::size_t>(n); i <= max_degree; ++i) c[i] += c[i - n];
  }
  return c;
}

GrowthReport growth_degree(const RationalSeries& s) {
  Coeffs num = s.numerator;
  trim(num);
  GrowthReport r;
  if (num.empty()) {
    r.growth_degree = -1;
  } else {
    const int poles = static_cast<int>(s.denominator.size()) - root_one_multiplicity(num);
    r.growth_degree = std::max(poles - 1, -1);
  }
  r.g_codimension = r.growth_degree + 1;
  r.fitted = false;
  return r;
}

GrowthReport fit_growth(const Coeffs& prefix) {
  if (prefix.size() < 8) fail(ErrorCode::kInvalidArgument, "fit_growth needs at least 8 terms");
  Coeffs cur(prefix.size());
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) cur[i] = acc += prefix[i];

  // A sequence counts as bounded when its second half never exceeds the
  // maximum of its first half.
  auto bounded = [](const Coeffs& v) {
    const std::size_t half = v.size() / 2;
    std::int64_t first = 0, second = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      (i < half ? first : second) = std::max(i < half ? first : second, std::abs(v[i]));
    return second <= first;
  };
  int j = 0;
  while (!bounded(cur) && cur.size() > 4) {
    Coeffs d(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) d[i] = cur[i + 1] - cur[i];
    cur = std::move(d);
    ++j;
  }
  GrowthReport r;
  r.growth_degree = j - 1;
  r.g_codimension = j;
  r.fitted = true;
  return r;
}

Coeffs growth_bound(const Coeffs& h_n, int n, std::size_t length) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "growth bound needs n != 0");
  const std::size_t stride = static_cast<std::size_t>(std::abs(n));
  Coeffs b(length, 0);
  for (std::size_t i = 0; i < length && i < h_n.size(); ++i) b[i] = h_n[i];
  for (std::size_t i = stride; i < length; ++i) b[i] += b[i - stride];
  return b;
}

BoundCheck growth_bound_check(const Coeffs& h_m, const Coeffs& h_n, int n) {
  if (h_m.size() != h_n.size())
    fail(ErrorCode::kInvalidArgument, "growth_bound_check needs prefixes of equal length");
  const Coeffs b = growth_bound(h_n, n, h_m.size());
  for (std::size_t i = 0; i < h_m.size(); ++i)
    if (h_m[i] > b[i]) return {false, i};
  return {true, std::nullopt};
}

RationalSeries ci_loop_series(const CIPresentation& p) {
  RationalSeries s{{1}, {}};
  for (int x : p.generators) {
    if (x < 1) fail(ErrorCode::kInvalidArgument, "generator codegree must be at least 1");
    Coeffs f(static_cast<std::size_t>(x), 0);
    f[0] += 1;
    f[static_cast<std::size_t>(x - 1)] += 1;
    s.numerator = poly_mul(s.numerator, f);
  }
  for (int r : p.relations) {
    if (r < 3)
      fail(ErrorCode::kInvalidArgument, "relation codegree " + std::to_string(r) + " is below 3");
    s.denominator.push_back(r - 2);
  }
  return s;
}

RationalSeries ci_cohomology_series(const CIPresentation& p) {
  RationalSeries s{{1}, {}};
  for (int r : p.relations) {
    if (r < 1) fail(ErrorCode::kInvalidArgument, "relation codegree must be positive");
    Coeffs f(static_cast<std::size_t>(r) + 1, 0);
    f[0] = 1;
    f[static_cast<std::size_t>(r)] = -1;
    s.numerator = poly_mul(s.numerator, f);
  }
  for (int x : p.generators) {
    if (x < 1) fail(ErrorCode::kInvalidArgument, "generator codegree must be at least 1");
    s.denominator.push_back(x);
  }
  return s;
}

PrefixComparison compare_prefix(const Coeffs& a, const Coeffs& b, std::size_t from, std::size_t to) {
  if (from > to) fail(ErrorCode::kInvalidArgument, "compare_prefix: empty range");
  if (a.size() <= to || b.size() <= to)
    fail(ErrorCode::kInvalidArgument, "compare_prefix: sequence shorter than the range");
  for (std::size_t i = from; i <= to; ++i)
    if (a[i] != b[i]) return {false, i};
  return {true, std::nullopt};
}

}  // namespace lsl::series
