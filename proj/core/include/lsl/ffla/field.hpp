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
#include <memory>
#include <string>
#include <vector>

namespace lsl::ffla {

/// Encoded field element. The integer n in [0, q) is read base p as the
/// coefficient vector of a polynomial in the generator, lowest degree first.
using Elem = std::uint16_t;

bool is_prime(std::uint32_t n);

/// GF(p^e) with log/antilog tables. Immutable once built; share through
/// FieldPtr.
class Field {
 public:
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  /// Builds GF(p^e) over the lexicographically least monic irreducible
  /// modulus of degree e (least integer code, constant term least
  /// significant). Throws kNotPrime / kInvalidArgument.
  static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_gf2() const { return q_ == 2; }
  bool char_two() const { return p_ == 2; }
  bool prime_field() const { return e_ == 1; }

  /// Coefficients of the modulus in GF(p), lowest degree first, length e+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem primitive_element() const { return primitive_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return static_cast<Elem>(a ^ b);
    if (e_ == 1) {
      std::uint32_t s = std::uint32_t{a} + b;
      return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
    return digit_add(a, b);
  }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[std::size_t{log_[a]} + log_[b]];
  }
  /// Throws kInvalidArgument on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t k) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  bool valid(std::uint64_t code) const { return code < q_; }

  /// Row of the multiplication table for c, or nullptr when q is too big to
  /// keep full tables.
  const Elem* mul_row(Elem c) const {
    return mul_table_.empty() ? nullptr : &mul_table_[std::size_t{c} * q_];
  }

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  Field() = default;
  Elem digit_add(Elem a, Elem b) const;

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;  // length 2(q-1)
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> add_table_;
  std::vector<Elem> mul_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace lsl::ffla
