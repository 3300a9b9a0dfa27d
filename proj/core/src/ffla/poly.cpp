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

#include "lsl/ffla/poly.hpp"

#include <algorithm>

#include "lsl/error.hpp"

namespace lsl::ffla::poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

std::pair<Poly, Poly> divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.empty()) fail(ErrorCode::kInvalidArgument, "polynomial division by zero");
  Poly r = a;
  trim(r);
  if (r.size() < b.size()) return {Poly{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const Elem lead_inv = f.inv(b.back());
  for (std::size_t i = r.size(); i-- >= b.size();) {
    Elem c = r[i];
    if (!c) continue;
    c = f.mul(c, lead_inv);
    const std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) r[shift + j] = f.sub(r[shift + j], f.mul(c, b[j]));
  }
  trim(q);
  trim(r);
  return {q, r};
}

Poly rem(const Field& f, const Poly& a, const Poly& b) { return divmod(f, a, b).second; }

Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  Poly out = a;
  const Elem inv = f.inv(a.back());
  for (auto& c : out) c = f.mul(c, inv);
  return out;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly derivative(const Field& f, const Poly& a) {
  if (a.size() <= 1) return {};
  Poly out(a.size() - 1, 0);
  for (std::size_t i = 1; i < a.size(); ++i)
    out[i - 1] = f.mul(f.from_int(static_cast<std::int64_t>(i)), a[i]);
  trim(out);
  return out;
}

Poly powmod(const Field& f, const Poly& base, std::uint64_t k, const Poly& m) {
  Poly result{1};
  result = rem(f, result, m);
  Poly b = rem(f, base, m);
  while (k) {
    if (k & 1) result = rem(f, mul(f, result, b), m);
    k >>= 1;
    if (k) b = rem(f, mul(f, b, b), m);
  }
  return result;
}

Poly charpoly(const Matrix& a) {
  if (a.rows() != a.cols()) fail(ErrorCode::kInvalidArgument, "charpoly: matrix not square");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  std::vector<std::vector<Elem>> h(n, std::vector<Elem>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = a.at(i, j);

  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
    }
    const Elem t_inv = f.inv(h[m][m - 1]);
    for (std::size_t r = m + 1; r < n; ++r) {
      const Elem u = f.mul(h[r][m - 1], t_inv);
      if (!u) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (h[m][c]) h[r][c] = f.sub(h[r][c], f.mul(u, h[m][c]));
      for (std::size_t rr = 0; rr < n; ++rr)
        if (h[rr][r]) h[rr][m] = f.add(h[rr][m], f.mul(u, h[rr][r]));
    }
  }

  std::vector<Poly> p(n + 1);
  p[0] = Poly{1};
  for (std::size_t m = 1; m <= n; ++m) {
    p[m] = mul(f, Poly{f.neg(h[m - 1][m - 1]), 1}, p[m - 1]);
    Elem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h[m - i][m - i - 1]);
      if (!t) break;
      const Elem c = f.mul(t, h[m - i - 1][m - 1]);
      if (c) p[m] = sub(f, p[m], mul(f, Poly{c}, p[m - i - 1]));
    }
  }
  return p[n];
}

Matrix evaluate(const Poly& fpoly, const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix result(a.field_ptr(), n, n);
  for (std::size_t i = fpoly.size(); i-- > 0;) {
    result = result * a;
    result = result.plus_scalar(fpoly[i]);
  }
  return result;
}

namespace {

Poly pth_root(const Field& f, const Poly& c) {
  const std::uint32_t p = f.p();
  const std::uint64_t root_exp = f.q() / p;  // a^(q/p) is the p-th root of a
  Poly out(c.size() / p + 1, 0);
  for (std::size_t i = 0; i < c.size(); i += p) out[i / p] = f.pow(c[i], root_exp);
  trim(out);
  return out;
}

void square_free(const Field& f, const Poly& a, int scale, std::vector<Factor>& out) {
  Poly c = gcd(f, a, derivative(f, a));
  Poly w = divmod(f, a, c).first;
  int i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(f, w, c);
    Poly fac = divmod(f, w, y).first;
    if (degree(fac) > 0) out.push_back({monic(f, fac), i * scale});
    w = y;
    c = divmod(f, c, y).first;
    ++i;
  }
  if (degree(c) > 0) square_free(f, pth_root(f, c), scale * static_cast<int>(f.p()), out);
}

Poly random_poly(const Field& f, std::size_t below_degree, Rng& rng) {
  Poly a(below_degree);
  for (auto& c : a) c = static_cast<Elem>(rng.below(f.q()));
  trim(a);
  return a;
}

void equal_degree(const Field& f, const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const std::uint32_t q = f.q();
  for (;;) {
    Poly a = random_poly(f, static_cast<std::size_t>(degree(g)), rng);
    if (degree(a) < 1) continue;
    Poly b;
    if (f.char_two()) {
      // Trace to GF(2): a + a^2 + ... + a^(2^(e d - 1)).
      const int steps = static_cast<int>(f.e()) * d;
      Poly t = a;
      b = a;
      for (int i = 1; i < steps; ++i) {
        t = rem(f, mul(f, t, t), g);
        b = add(f, b, t);
      }
    } else {
      Poly t = a, acc = a;
      for (int i = 1; i < d; ++i) {
        t = powmod(f, t, q, g);
        acc = rem(f, mul(f, acc, t), g);
      }
      b = sub(f, powmod(f, acc, (q - 1) / 2, g), Poly{1});
    }
    Poly h = gcd(f, b, g);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree(f, h, d, rng, out);
      equal_degree(f, divmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Field& f, const Poly& a_in, Rng& rng) {
  Poly a = a_in;
  trim(a);
  if (a.empty()) fail(ErrorCode::kInvalidArgument, "factor: zero polynomial");
  a = monic(f, a);
  std::vector<Factor> sqf;
  square_free(f, a, 1, sqf);

  std::vector<Factor> result;
  for (const auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly x{0, 1};
    Poly h = rem(f, x, g);
    for (int i = 1; degree(g) >= 2 * i; ++i) {
      h = powmod(f, h, f.q(), g);
      Poly dpart = gcd(f, sub(f, h, x), g);
      if (degree(dpart) > 0) {
        std::vector<Poly> pieces;
        equal_degree(f, dpart, i, rng, pieces);
        for (auto& piece : pieces) result.push_back({monic(f, piece), mult});
        g = divmod(f, g, dpart).first;
        h = rem(f, h, g);
      }
    }
    if (degree(g) > 0) result.push_back({monic(f, g), mult});
  }

  // Merge repeated irreducibles coming from different square-free layers.
  std::sort(result.begin(), result.end(), [](const Factor& x, const Factor& y) {
    if (x.factor.size() != y.factor.size()) return x.factor.size() < y.factor.size();
    return std::lexicographical_compare(x.factor.rbegin(), x.factor.rend(), y.factor.rbegin(),
                                        y.factor.rend());
  });
  std::vector<Factor> merged;
  for (auto& fac : result) {
    if (!merged.empty() && merged.back().factor == fac.factor)
      merged.back().multiplicity += fac.multiplicity;
    else
      merged.push_back(fac);
  }
  return merged;
}

}  // namespace lsl::ffla::poly
