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


#include <benchmark/benchmark.h>

#include "lsl/ffla/linalg.hpp"
#include "lsl/grp/group.hpp"
#include "lsl/modrep/meataxe.hpp"
#include "lsl/modrep/projective.hpp"
#include "lsl/rng.hpp"
#include "lsl/squeeze/resolution.hpp"

namespace {

using lsl::ffla::Matrix;

Matrix random_matrix(const lsl::ffla::FieldPtr& f, std::size_t n, lsl::Rng& rng) {
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, static_cast<lsl::ffla::Elem>(rng.below(f->q())));
  return m;
}

void BM_Rref(benchmark::State& state) {
  auto f = lsl::ffla::Field::make(static_cast<std::uint32_t>(state.range(0)), 1);
  lsl::Rng rng(1);
  Matrix m = random_matrix(f, static_cast<std::size_t>(state.range(1)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(lsl::ffla::rref(m));
}
BENCHMARK(BM_Rref)->Args({2, 512})->Args({2, 2048})->Args({3, 256})->Args({7, 256})->Unit(benchmark::kMillisecond);

void BM_Multiply(benchmark::State& state) {
  auto f = lsl::ffla::Field::make(static_cast<std::uint32_t>(state.range(0)), 1);
  lsl::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(1));
  Matrix a = random_matrix(f, n, rng), b = random_matrix(f, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Args({2, 512})->Args({2, 2048})->Args({3, 256})->Unit(benchmark::kMillisecond);

void BM_ChopL32Regular(benchmark::State& state) {
  auto e = lsl::grp::catalog("L3_2");
  auto t = lsl::grp::enumerate(e.group);
  auto f = lsl::ffla::Field::make(e.p, e.e);
  auto m = lsl::grp::regular_module(t, f);
  for (auto _ : state) {
    lsl::Rng rng(3);
    benchmark::DoNotOptimize(lsl::modrep::chop(m, rng));
  }
}
BENCHMARK(BM_ChopL32Regular)->Unit(benchmark::kMillisecond);

void BM_SqueezeA4(benchmark::State& state) {
  auto e = lsl::grp::catalog("A4");
  auto t = lsl::grp::enumerate(e.group);
  auto f = lsl::ffla::Field::make(e.p, e.e);
  lsl::Rng rng(4);
  auto reg = lsl::modrep::simples(t, f, lsl::modrep::default_seeds(t, f), rng);
  auto pims = lsl::modrep::decompose_projectives(t, f, reg, rng);
  const lsl::squeeze::Limits limits{static_cast<std::size_t>(state.range(0)), 20000};
  for (auto _ : state) benchmark::DoNotOptimize(lsl::squeeze::squeezed_resolution(reg, pims, limits));
}
BENCHMARK(BM_SqueezeA4)->Arg(12)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
