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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "lsl/error.hpp"
#include "lsl/grp/group.hpp"
#include "lsl/modrep/hom.hpp"
#include "lsl/modrep/iso.hpp"
#include "lsl/modrep/meataxe.hpp"
#include "lsl/modrep/projective.hpp"
#include "lsl/modrep/registry.hpp"
#include "lsl/modrep/structure.hpp"
#include "oracle.hpp"

namespace lsl::modrep {
namespace {

struct GroupSetup {
  grp::GroupTable table;
  FieldPtr field;
};

GroupSetup setup(const std::string& name) {
  auto e = grp::catalog(name);
  return {grp::enumerate(e.group), ffla::Field::make(e.p, e.e)};
}

// Brute-force Hom dimension: count matrices X with A_g X = X B_g by
// enumerating all of them (tiny modules only).
std::size_t hom_dim_brute(const ModulePtr& m, const ModulePtr& n) {
  const auto& f = m->field;
  std::size_t count = 0;
  oracle::for_each_vector(f, m->dim * n->dim, [&](const Matrix& v) {
    Matrix x(f, m->dim, n->dim);
    for (std::size_t i = 0; i < m->dim; ++i)
      for (std::size_t j = 0; j < n->dim; ++j) x.set(i, j, v.at(0, i * n->dim + j));
    count += is_equivariant({m, n, x}) ? 1 : 0;
  });
  std::size_t d = 0;
  while (oracle::ipow(f->q(), d) < count) ++d;
  return d;
}

std::vector<std::size_t> sorted_dims(const SimpleRegistry& reg) {
  std::vector<std::size_t> d;
  for (const auto& s : reg.simples()) d.push_back(s->dim);
  std::sort(d.begin(), d.end());
  return d;
}

TEST(Hom, Examples) {
  auto s = setup("C2");
  auto k = trivial_module(s.field, 1);
  EXPECT_EQ(hom_space(k, k).size(), 1u);
  auto reg = grp::regular_module(s.table, s.field);
  EXPECT_EQ(hom_space(reg, reg).size(), 2u);
  EXPECT_EQ(hom_dim_brute(reg, reg), 2u);
  for (const auto& h : hom_space(reg, reg)) EXPECT_TRUE(is_equivariant(h));
}

TEST(Hom, FreenessOfRegularModule) {
  for (std::string g : {"S3", "A4", "C4"}) {
    auto s = setup(g);
    auto reg = grp::regular_module(s.table, s.field);
    auto perm = grp::permutation_module(s.table.presentation, s.field);
    EXPECT_EQ(hom_space(reg, perm).size(), perm->dim) << g;
    EXPECT_EQ(hom_space(reg, reg).size(), reg->dim) << g;
  }
}

TEST(Hom, AgreesWithBruteForce) {
  auto s = setup("S3");
  auto f = s.field;
  auto perm = grp::permutation_module(s.table.presentation, f);
  auto k = trivial_module(f, 2);
  EXPECT_EQ(hom_space(perm, perm).size(), hom_dim_brute(perm, perm));
  EXPECT_EQ(hom_space(perm, k).size(), hom_dim_brute(perm, k));
  EXPECT_EQ(hom_space(k, perm).size(), hom_dim_brute(k, perm));
  auto c4 = setup("C4");
  auto r4 = grp::regular_module(c4.table, c4.field);
  auto k4 = trivial_module(c4.field, 1);
  auto sum = direct_sum({k4, k4});
  EXPECT_EQ(hom_space(sum, r4).size(), hom_dim_brute(sum, r4));
  EXPECT_EQ(hom_space(r4, sum).size(), hom_dim_brute(r4, sum));
  EXPECT_EQ(hom_space(sum, sum).size(), 4u);
}

TEST(Module, SpinAndQuotientOfRegularC2) {
  auto s = setup("C2");
  auto reg = grp::regular_module(s.table, s.field);
  auto sub = spin(reg, Matrix::from_rows(s.field, {{1, 1}}));
  EXPECT_EQ(sub.module->dim, 1u);
  EXPECT_TRUE(sub.module->action[0].is_identity());
  auto q = quotient(reg, sub.inclusion);
  EXPECT_EQ(q.module->dim, 1u);
  EXPECT_TRUE(q.module->action[0].is_identity());
  EXPECT_TRUE(is_equivariant(q.projection));
  EXPECT_EQ(spin(reg, Matrix::identity(s.field, 2)).module->dim, 2u);
  EXPECT_EQ(spin(reg, Matrix(s.field, 1, 2)).module->dim, 0u);
  EXPECT_EQ(quotient(reg, spin(reg, Matrix(s.field, 1, 2)).inclusion).module->dim, 2u);
  EXPECT_EQ(quotient(reg, identity_map(reg)).module->dim, 0u);
}

TEST(Module, NotSubmoduleThrows) {
  auto s = setup("C2");
  auto reg = grp::regular_module(s.table, s.field);
  try {
    submodule_from_basis(reg, Matrix::from_rows(s.field, {{1, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotSubmodule);
  }
}

TEST(Module, RegularMatricesFollowGroupProducts) {
  Rng rng(21);
  for (std::string g : {"A4", "L3_2", "S3"}) {
    auto s = setup(g);
    auto reg = grp::regular_module(s.table, s.field);
    for (int t = 0; t < 10; ++t) {
      std::vector<std::size_t> word(1 + rng.below(8));
      for (auto& w : word) w = rng.below(s.table.num_generators());
      Matrix m = word_matrix(*reg, word);
      const std::uint32_t x = s.table.evaluate(word);
      // e_0 * word = e_x
      for (std::size_t c = 0; c < reg->dim; ++c) EXPECT_EQ(m.at(0, c), c == x ? 1 : 0);
    }
  }
}

TEST(Module, TensorAndDual) {
  Rng rng(22);
  auto s = setup("L3_2");
  auto perm = grp::permutation_module(s.table.presentation, s.field);
  auto k = trivial_module(s.field, 2);
  EXPECT_EQ(is_isomorphic(tensor(k, perm), perm, rng).verdict, IsoVerdict::kYes);
  EXPECT_EQ(is_isomorphic(dual(dual(perm)), perm, rng).verdict, IsoVerdict::kYes);
}

TEST(Meataxe, PermutationModuleOfL32) {
  Rng rng(23);
  auto s = setup("L3_2");
  auto perm = grp::permutation_module(s.table.presentation, s.field);
  auto c = chop(perm, rng);
  std::vector<std::size_t> dims;
  for (auto& [m, mult] : c) {
    EXPECT_EQ(mult, 1u);
    dims.push_back(m->dim);
  }
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<std::size_t>{1, 3, 3}));
  // The two 3-dim factors are not isomorphic.
  std::vector<ModulePtr> three;
  for (auto& [m, mult] : c)
    if (m->dim == 3) three.push_back(m);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_FALSE(same_simple(three[0], three[1]));
}

TEST(Meataxe, PGroupRegular) {
  Rng rng(24);
  for (std::string g : {"C2", "C3", "C4"}) {
    auto s = setup(g);
    auto c = chop(grp::regular_module(s.table, s.field), rng);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].first->dim, 1u);
    EXPECT_EQ(c[0].second, s.table.order());
  }
}

TEST(Meataxe, RegularA4) {
  Rng rng(25);
  auto s = setup("A4");
  auto c = chop(grp::regular_module(s.table, s.field), rng);
  ASSERT_EQ(c.size(), 3u);
  for (auto& [m, mult] : c) {
    EXPECT_EQ(m->dim, 1u);
    EXPECT_EQ(mult, 4u);
  }
}

TEST(Meataxe, IrreducibleCertificate) {
  Rng rng(26);
  auto s = setup("L3_2");
  auto perm = grp::permutation_module(s.table.presentation, s.field);
  for (auto& [m, mult] : chop(perm, rng)) {
    auto out = split(m, rng);
    EXPECT_FALSE(out.submodule);
    ASSERT_TRUE(out.certificate);
  }
  EXPECT_FALSE(is_irreducible(perm, rng));
}

TEST(Meataxe, NonAbsolutelyIrreducible) {
  // A4 over GF(2): the two nontrivial 1-dim modules over GF(4) fuse into one
  // 2-dim simple with End = GF(4).
  Rng rng(27);
  auto e = grp::catalog("A4");
  auto t = grp::enumerate(e.group);
  auto f = ffla::Field::make(2, 1);
  auto reg = simples(t, f, {grp::regular_module(t, f)}, rng);
  EXPECT_EQ(sorted_dims(reg), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(reg.end_dim(1), 2u);
  EXPECT_TRUE(reg.complete());
  auto pims = decompose_projectives(t, f, reg, rng);
  EXPECT_EQ(pims[0].module->dim, 4u);
  EXPECT_EQ(pims[1].module->dim, 8u);
  auto heads = head_multiplicities(pims[1].module, reg);
  ASSERT_EQ(heads.size(), 1u);
  EXPECT_EQ(heads[0], (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(Registry, Examples) {
  Rng rng(28);
  auto c3 = setup("C3");
  auto r = simples(c3.table, c3.field, default_seeds(c3.table, c3.field), rng);
  EXPECT_EQ(r.size(), 1u);
  EXPECT_TRUE(r.complete());
  auto a4 = setup("A4");
  auto ra = simples(a4.table, a4.field, default_seeds(a4.table, a4.field), rng);
  EXPECT_EQ(sorted_dims(ra), (std::vector<std::size_t>{1, 1, 1}));
  auto l = setup("L3_2");
  auto rl = simples(l.table, l.field, default_seeds(l.table, l.field), rng);
  EXPECT_EQ(sorted_dims(rl), (std::vector<std::size_t>{1, 3, 3, 8}));
  EXPECT_TRUE(rl.complete());
  EXPECT_EQ(rl.simple(0)->dim, 1u);
  for (std::size_t i = 0; i < rl.size(); ++i) EXPECT_EQ(rl.end_dim(i), 1u);
}

TEST(Registry, SimpleCountFromClasses) {
  auto l = setup("L3_2");
  EXPECT_EQ(grp::simple_module_count(l.table, 2, 2), 4u);
  auto a = setup("A4");
  EXPECT_EQ(grp::simple_module_count(a.table, 2, 4), 3u);
  EXPECT_EQ(grp::simple_module_count(a.table, 2, 2), 2u);
  auto s3 = setup("S3");
  EXPECT_EQ(grp::simple_module_count(s3.table, 3, 3), 2u);
  EXPECT_EQ(grp::simple_module_count(s3.table, 2, 2), 2u);
}

TEST(Structure, RadicalSocleHeadC2) {
  auto s = setup("C2");
  Rng rng(29);
  auto reg = simples(s.table, s.field, default_seeds(s.table, s.field), rng);
  auto k = reg.simple(0);
  EXPECT_EQ(radical(k, reg).module->dim, 0u);
  EXPECT_EQ(socle(k, reg).module->dim, 1u);
  auto h = head_multiplicities(k, reg);
  EXPECT_EQ(h, (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  auto rm = grp::regular_module(s.table, s.field);
  EXPECT_EQ(radical(rm, reg).module->dim, 1u);
  EXPECT_EQ(socle(rm, reg).module->dim, 1u);
  EXPECT_EQ(head_multiplicities(rm, reg), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST(Structure, IncompleteRegistryDetected) {
  auto s = setup("L3_2");
  SimpleRegistry only_k(s.field, 2);
  auto perm = grp::permutation_module(s.table.presentation, s.field);
  try {
    radical(perm, only_k);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompleteRegistry);
  }
}

class PimsA4 : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    s_ = new GroupSetup(setup("A4"));
    Rng rng(30);
    reg_ = new SimpleRegistry(simples(s_->table, s_->field, default_seeds(s_->table, s_->field), rng));
    pims_ = new std::vector<Pim>(decompose_projectives(s_->table, s_->field, *reg_, rng));
  }
  static void TearDownTestSuite() {
    delete pims_;
    delete reg_;
    delete s_;
  }
  static GroupSetup* s_;
  static SimpleRegistry* reg_;
  static std::vector<Pim>* pims_;
};
GroupSetup* PimsA4::s_ = nullptr;
SimpleRegistry* PimsA4::reg_ = nullptr;
std::vector<Pim>* PimsA4::pims_ = nullptr;

TEST_F(PimsA4, FourDimensionalWithSimpleHeadAndSocle) {
  ASSERT_EQ(pims_->size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = (*pims_)[i];
    EXPECT_EQ(p.simple, i);
    EXPECT_EQ(p.module->dim, 4u);
    auto h = head_multiplicities(p.module, *reg_);
    EXPECT_EQ(h, (std::vector<std::pair<std::size_t, std::size_t>>{{i, 1}}));
    auto soc = socle(p.module, *reg_);
    EXPECT_EQ(soc.module->dim, 1u);
    // Inclusion lands in kG equivariantly.
    EXPECT_TRUE(is_equivariant({p.module, grp::regular_module(s_->table, s_->field), p.inclusion}));
    EXPECT_TRUE((p.inclusion * p.projection).is_identity());
  }
}

TEST_F(PimsA4, LayersOfTrivialPim) {
  const auto& pk = (*pims_)[0];
  auto layers = radical_layers(pk.module, *reg_);
  ASSERT_EQ(layers.size(), 3u);
  EXPECT_EQ(layers[0], (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  EXPECT_EQ(layers[1], (std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {2, 1}}));
  EXPECT_EQ(layers[2], (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
  auto rad = radical(pk.module, *reg_);
  EXPECT_EQ(rad.module->dim, 3u);
  auto socp = socle(pk.module, *reg_);
  EXPECT_EQ(head_multiplicities(socp.module, *reg_), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}}));
}

TEST_F(PimsA4, CoverOfTrivialAndOfItsRadical) {
  auto c = projective_cover(reg_->simple(0), *pims_, *reg_);
  EXPECT_EQ(c.projective->dim, 4u);
  EXPECT_EQ(c.labels, std::vector<std::size_t>{0});
  EXPECT_TRUE(is_equivariant(c.map));
  auto rad = radical((*pims_)[0].module, *reg_);
  auto c2 = projective_cover(rad.module, *pims_, *reg_);
  EXPECT_EQ(c2.projective->dim, 8u);
  EXPECT_EQ(c2.labels, (std::vector<std::size_t>{1, 2}));
  EXPECT_TRUE(is_equivariant(c2.map));
  EXPECT_EQ(ffla::rank(c2.map.matrix), rad.module->dim);
  // Minimality: kernel inside the radical of P.
  auto ker = kernel(c2.map);
  auto radp = radical(c2.projective, *reg_);
  EXPECT_EQ(ffla::rank(Matrix::stack(ker.inclusion.matrix, radp.inclusion.matrix)), radp.module->dim);
}

TEST(Projective, PGroupPimIsRegular) {
  Rng rng(31);
  auto s = setup("C2");
  auto reg = simples(s.table, s.field, default_seeds(s.table, s.field), rng);
  auto pims = decompose_projectives(s.table, s.field, reg, rng);
  ASSERT_EQ(pims.size(), 1u);
  EXPECT_EQ(pims[0].module->dim, 2u);
  auto c = projective_cover(reg.simple(0), pims, reg);
  EXPECT_EQ(c.projective->dim, 2u);
  EXPECT_EQ(kernel(c.map).module->dim, 1u);
}

TEST(Projective, L32PimDimensions) {
  Rng rng(32);
  auto s = setup("L3_2");
  auto reg = simples(s.table, s.field, default_seeds(s.table, s.field), rng);
  auto pims = decompose_projectives(s.table, s.field, reg, rng);
  std::map<std::size_t, std::size_t> by_simple_dim;
  std::size_t total = 0;
  for (const auto& p : pims) {
    by_simple_dim[reg.simple(p.simple)->dim] += p.module->dim;
    total += p.module->dim * reg.simple(p.simple)->dim;
    EXPECT_EQ(head_multiplicities(p.module, reg),
              (std::vector<std::pair<std::size_t, std::size_t>>{{p.simple, 1}}));
  }
  EXPECT_EQ(total, 168u);
  EXPECT_EQ(by_simple_dim[1], 8u);
  EXPECT_EQ(by_simple_dim[3], 32u);  // two PIMs of dim 16
  EXPECT_EQ(by_simple_dim[8], 8u);
}

TEST(Iso, Examples) {
  Rng rng(33);
  auto s = setup("C2");
  auto reg = grp::regular_module(s.table, s.field);
  auto k = trivial_module(s.field, 1);
  EXPECT_EQ(is_isomorphic(reg, reg, rng).verdict, IsoVerdict::kYes);
  EXPECT_EQ(is_isomorphic(k, reg, rng).verdict, IsoVerdict::kNo);
  // kC2 and k + k have equal factors but are not isomorphic.
  EXPECT_EQ(is_isomorphic(reg, direct_sum({k, k}), rng).verdict, IsoVerdict::kNo);
}

TEST(Iso, WitnessAfterRandomBasisChange) {
  Rng rng(34);
  auto s = setup("A4");
  auto perm = grp::permutation_module(s.table.presentation, s.field);
  Matrix c;
  do {
    c = oracle::random_matrix(s.field, 4, 4, rng);
  } while (!ffla::is_invertible(c));
  Matrix ci = ffla::inverse(c).value();
  std::vector<Matrix> act;
  for (const auto& a : perm->action) act.push_back(ci * a * c);
  auto conj = make_module(s.field, act);
  auto r = is_isomorphic(perm, conj, rng);
  ASSERT_EQ(r.verdict, IsoVerdict::kYes);
  EXPECT_TRUE(is_equivariant({perm, conj, *r.witness}));
  EXPECT_TRUE(ffla::is_invertible(*r.witness));
  EXPECT_EQ(is_isomorphic(conj, perm, rng).verdict, IsoVerdict::kYes);
}

}  // namespace
}  // namespace lsl::modrep
