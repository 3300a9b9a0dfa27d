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

#include "lsl/grp/group.hpp"

#include <charconv>
#include <deque>
#include <numeric>

#include "lsl/error.hpp"

namespace lsl::grp {

using ffla::Matrix;

Perm perm_identity(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>(i);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
  return out;
}

Perm perm_inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[a[x]] = static_cast<std::uint32_t>(x);
  return out;
}

bool is_permutation(const Perm& a, std::size_t degree) {
  if (a.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (auto v : a) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void validate(const GroupPresentation& g) {
  if (g.degree == 0) fail(ErrorCode::kIngestion, "group degree must be positive");
  if (g.generators.empty()) fail(ErrorCode::kIngestion, "group needs at least one generator");
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    if (!is_permutation(g.generators[i], g.degree))
      fail(ErrorCode::kIngestion, "generator " + std::to_string(i) + " is not a permutation of [0," +
                                      std::to_string(g.degree) + ")");
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (auto v : p) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h);
}

std::uint32_t GroupTable::index_of(const Perm& p) const {
  auto it = index.find(p);
  if (it == index.end()) fail(ErrorCode::kInvalidArgument, "permutation is not in the group");
  return it->second;
}

std::uint32_t GroupTable::product(std::uint32_t a, std::uint32_t b) const {
  return index_of(perm_mul(elements[a], elements[b]));
}

std::uint32_t GroupTable::evaluate(const std::vector<std::size_t>& word) const {
  std::uint32_t cur = 0;
  for (auto g : word) cur = right_mul[g][cur];
  return cur;
}

GroupTable enumerate(const GroupPresentation& g, std::size_t max_order) {
  if (max_order < 1) fail(ErrorCode::kInvalidArgument, "max_order must be at least 1");
  validate(g);
  GroupTable t;
  t.presentation = g;
  t.elements.push_back(perm_identity(g.degree));
  t.index.emplace(t.elements.front(), 0);
  t.right_mul.assign(g.generators.size(), {});
  for (std::size_t next = 0; next < t.elements.size(); ++next) {
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      Perm prod = perm_mul(t.elements[next], g.generators[k]);
      auto [it, inserted] = t.index.emplace(prod, static_cast<std::uint32_t>(t.elements.size()));
      if (inserted) {
        if (t.elements.size() >= max_order)
          fail(ErrorCode::kOrderLimitExceeded,
               "group order exceeds limit " + std::to_string(max_order));
        t.elements.push_back(std::move(prod));
      }
      t.right_mul[k].push_back(it->second);
    }
  }
  return t;
}

std::uint64_t perm_order(const Perm& a) {
  std::vector<bool> seen(a.size(), false);
  std::uint64_t order = 1;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (std::size_t y = x; !seen[y]; y = a[y]) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::size_t simple_module_count(const GroupTable& t, std::uint32_t p, std::uint32_t q) {
  const std::size_t n = t.order();
  std::vector<Perm> gen_inv;
  for (const auto& g : t.presentation.generators) gen_inv.push_back(perm_inverse(g));

  // Conjugacy classes as orbits under conjugation by the generators.
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> cls(n, kNone);
  std::uint32_t num_classes = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (cls[s] != kNone) continue;
    std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(s)};
    cls[s] = num_classes;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Perm& x = t.elements[queue[i]];
      for (std::size_t k = 0; k < gen_inv.size(); ++k) {
        std::uint32_t y = t.index_of(perm_mul(perm_mul(gen_inv[k], x), t.presentation.generators[k]));
        if (cls[y] == kNone) {
          cls[y] = num_classes;
          queue.push_back(y);
        }
      }
    }
    ++num_classes;
  }

  std::vector<std::uint32_t> rep(num_classes, kNone);
  for (std::size_t i = 0; i < n; ++i)
    if (rep[cls[i]] == kNone) rep[cls[i]] = static_cast<std::uint32_t>(i);

  // Union the classes of x and x^q among p-regular classes.
  std::vector<std::uint32_t> parent(num_classes);
  for (std::uint32_t c = 0; c < num_classes; ++c) parent[c] = c;
  auto find = [&](std::uint32_t c) {
    while (parent[c] != c) c = parent[c] = parent[parent[c]];
    return c;
  };
  std::size_t count = 0;
  std::vector<bool> regular(num_classes, false);
  for (std::uint32_t c = 0; c < num_classes; ++c) {
    const Perm& x = t.elements[rep[c]];
    if (perm_order(x) % p == 0) continue;
    regular[c] = true;
    Perm xq = perm_identity(x.size());
    for (std::uint32_t i = 0; i < q; ++i) xq = perm_mul(xq, x);
    std::uint32_t a = find(c), b = find(cls[t.index_of(xq)]);
    if (a != b) parent[a] = b;
  }
  for (std::uint32_t c = 0; c < num_classes; ++c)
    if (regular[c] && find(c) == c) ++count;
  return count;
}

modrep::ModulePtr regular_module(const GroupTable& t, const ffla::FieldPtr& f) {
  const std::size_t n = t.order();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < t.num_generators(); ++k) {
    Matrix m(f, n, n);
    for (std::size_t h = 0; h < n; ++h) m.set(h, t.right_mul[k][h], 1);
    action.push_back(std::move(m));
  }
  auto m = std::make_shared<modrep::GModule>();
  m->field = f;
  m->dim = n;
  m->action = std::move(action);
  m->label = "k" + t.presentation.name;
  return m;
}

modrep::ModulePtr permutation_module(const GroupPresentation& g, const ffla::FieldPtr& f) {
  validate(g);
  std::vector<Matrix> action;
  for (const auto& gen : g.generators) {
    Matrix m(f, g.degree, g.degree);
    for (std::size_t x = 0; x < g.degree; ++x) m.set(x, gen[x], 1);
    action.push_back(std::move(m));
  }
  auto m = std::make_shared<modrep::GModule>();
  m->field = f;
  m->dim = g.degree;
  m->action = std::move(action);
  m->label = "perm" + std::to_string(g.degree);
  return m;
}

Matrix left_multiplication(const GroupTable& t, const ffla::FieldPtr& f,
                           const std::vector<std::pair<std::uint32_t, ffla::Elem>>& a) {
  const std::size_t n = t.order();
  Matrix out(f, n, n);
  for (const auto& [u, c] : a) {
    if (!c) continue;
    const Perm& pu = t.elements[u];
    for (std::size_t x = 0; x < n; ++x) {
      std::uint32_t ux = t.index_of(perm_mul(pu, t.elements[x]));
      out.set(x, ux, f->add(out.at(x, ux), c));
    }
  }
  return out;
}

namespace {

bool parse_uint(const std::string& s, std::uint32_t& out) {
  if (s.empty()) return false;
  auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

std::uint32_t smallest_prime_factor(std::uint32_t n) {
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

Perm cycle(std::size_t n) {
  Perm p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<std::uint32_t>((i + 1) % n);
  return p;
}

// Nontrivial C_p x| C_q on the p points of GF(p): x -> x+1 and x -> a x with
// a of multiplicative order q.
CatalogEntry semidirect(std::uint32_t p, std::uint32_t q) {
  if (!ffla::is_prime(p)) fail(ErrorCode::kIngestion, "p:q needs p prime");
  if (q < 2 || (p - 1) % q != 0) fail(ErrorCode::kIngestion, "p:q needs q > 1 dividing p-1");
  std::uint32_t a = 0;
  for (std::uint32_t cand = 2; cand < p && !a; ++cand) {
    std::uint64_t x = 1;
    std::uint32_t ord = 0;
    do {
      x = x * cand % p;
      ++ord;
    } while (x != 1);
    if (ord == q) a = cand;
  }
  Perm scale(p);
  for (std::uint32_t x = 0; x < p; ++x) scale[x] = static_cast<std::uint32_t>(std::uint64_t{a} * x % p);
  CatalogEntry e;
  e.group = {std::to_string(p) + ":" + std::to_string(q), p, {cycle(p), scale}};
  e.p = p;
  return e;
}

}  // namespace

CatalogEntry catalog(const std::string& name) {
  CatalogEntry e;
  if (name == "A4") {
    e.group = {"A4", 4, {{1, 2, 0, 3}, {0, 2, 3, 1}}};
    e.p = 2;
    e.e = 2;  // GF(4) contains the cube roots of unity
    return e;
  }
  if (name == "L3_2") {
    // Singer cycle and a transvection acting on the 7 points of PG(2,2).
    e.group = {"L3_2", 7, {{4, 0, 3, 1, 6, 2, 5}, {0, 1, 2, 5, 6, 3, 4}}};
    return e;
  }
  if (name == "L3_3") {
    // Singer cycle and a transvection acting on the 13 points of PG(2,3).
    e.group = {"L3_3", 13,
               {{6, 0, 5, 4, 1, 12, 9, 2, 11, 7, 3, 10, 8},
                {0, 1, 2, 3, 7, 8, 9, 10, 11, 12, 4, 5, 6}}};
    return e;
  }
  if (name == "S3") {
    e = semidirect(3, 2);
    e.group.name = "S3";
    return e;
  }
  if (name.size() > 1 && name[0] == 'C') {
    std::uint32_t n = 0;
    if (!parse_uint(name.substr(1), n) || n < 2) fail(ErrorCode::kIngestion, "bad cyclic group name " + name);
    e.group = {name, n, {cycle(n)}};
    e.p = smallest_prime_factor(n);
    return e;
  }
  if (auto colon = name.find(':'); colon != std::string::npos) {
    std::uint32_t p = 0, q = 0;
    if (!parse_uint(name.substr(0, colon), p) || !parse_uint(name.substr(colon + 1), q))
      fail(ErrorCode::kIngestion, "bad semidirect product name " + name);
    return semidirect(p, q);
  }
  fail(ErrorCode::kIngestion, "unknown catalog group " + name);
}

std::vector<std::string> catalog_names() {
  return {"C2", "C3", "C4", "S3", "3:2", "A4", "L3_2", "L3_3"};
}

}  // namespace lsl::grp
