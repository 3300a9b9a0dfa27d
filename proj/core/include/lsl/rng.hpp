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
#include <random>

namespace lsl {

// Explicit random state. Every randomized routine takes one of these by
// reference; nothing in the library draws from a hidden global source.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). Plain modulo keeps the stream identical across
  // standard libraries, unlike std::uniform_int_distribution.
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

  // Independent stream for a named phase, so later phases do not depend on
  // how many draws earlier phases consumed.
  Rng fork(std::uint64_t salt) {
    return Rng(engine_() ^ (salt * 0x9e3779b97f4a7c15ULL));
  }

  static Rng stream(std::uint64_t seed, std::uint64_t salt) {
    return Rng(seed * 0xd1b54a32d192ed03ULL + salt * 0x9e3779b97f4a7c15ULL + 1);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lsl
