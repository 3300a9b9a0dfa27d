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

#include "lsl/ffla/field.hpp"

#include <string>

#include "lsl/error.hpp"

namespace lsl::ffla {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Digits d(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Remainder of a by the monic polynomial m over GF(p); both low-first.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      std::size_t k = i - dm + j;
      a[k] = (a[k] + (p - c) * m[j]) % p;
    }
  }
  a.resize(dm);
  return a;
}

Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& m,
                    std::uint32_t p) {
  Digits prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(prod, m, p);
}

// Monic candidate of degree deg with low coefficients given by code.
Digits monic_from_code(std::uint32_t code, std::uint32_t p, std::uint32_t deg) {
  Digits m = to_digits(code, p, deg);
  m.push_back(1);
  return m;
}

bool divides(const Digits& f, const Digits& g, std::uint32_t p) {
  Digits r = poly_mod(g, f, p);
  for (auto c : r)
    if (c != 0) return false;
  return true;
}

bool irreducible(const Digits& m, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(m.size() - 1);
  if (deg <= 1) return true;
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint32_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint32_t code = 0; code < count; ++code)
      if (divides(monic_from_code(code, p, d), m, p)) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) fail(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  if (e < 1 || e > 16) fail(ErrorCode::kInvalidArgument, "extension degree must be in [1,16]");
  std::uint64_t q64 = 1;
  for (std::uint32_t i = 0; i < e; ++i) q64 *= p;
  if (q64 > kMaxOrder) fail(ErrorCode::kInvalidArgument, "field order exceeds 2^16");

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = static_cast<std::uint32_t>(q64);
  const std::uint32_t q = f->q_;

  Digits modulus;
  std::uint32_t lower = q;  // p^e candidates for the lower coefficients
  for (std::uint32_t code = 0; code < lower; ++code) {
    Digits cand = monic_from_code(code, p, e);
    if (irreducible(cand, p)) {
      modulus = cand;
      break;
    }
  }
  if (modulus.empty()) fail(ErrorCode::kInternal, "no irreducible modulus found");
  f->modulus_ = modulus;

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    return from_digits(poly_mul_mod(to_digits(a, p, e), to_digits(b, p, e), modulus, p), p);
  };

  // Search for a generator of the multiplicative group.
  f->exp_.assign(2 * std::size_t{q - 1} + 1, 0);
  f->log_.assign(q, 0);
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = 1;
    std::uint32_t order = 0;
    do {
      x = slow_mul(x, g);
      ++order;
    } while (x != 1 && order < q);
    if (order != q - 1) continue;
    f->primitive_ = static_cast<Elem>(g);
    x = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
      f->exp_[k] = static_cast<Elem>(x);
      f->exp_[k + q - 1] = static_cast<Elem>(x);
      f->log_[x] = k;
      x = slow_mul(x, g);
    }
    break;
  }
  if (q == 2) f->primitive_ = 1;

  f->neg_.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    Digits d = to_digits(a, p, e);
    for (auto& c : d) c = (p - c) % p;
    f->neg_[a] = static_cast<Elem>(from_digits(d, p));
  }
  f->inv_.assign(q, 0);
  for (std::uint32_t a = 1; a < q; ++a)
    f->inv_[a] = f->exp_[(q - 1 - f->log_[a]) % (q - 1)];

  if (e > 1 && p != 2 && q <= 256) {
    f->add_table_.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        f->add_table_[std::size_t{a} * q + b] = f->digit_add(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  if (q <= 256) {
    f->mul_table_.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        f->mul_table_[std::size_t{a} * q + b] = f->mul(static_cast<Elem>(a), static_cast<Elem>(b));
  }
  return f;
}

Elem Field::digit_add(Elem a, Elem b) const {
  std::uint32_t x = a, y = b, out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return static_cast<Elem>(out);
}

Elem Field::inv(Elem a) const {
  if (a == 0) fail(ErrorCode::kInvalidArgument, "inverse of zero");
  return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t l = (std::uint64_t{log_[a]} * (k % (q_ - 1))) % (q_ - 1);
  return exp_[l];
}

Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::string Field::name() const {
  return "GF(" + std::to_string(q_) + ")";
}

}  // namespace lsl::ffla
