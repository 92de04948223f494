// Copyright 2026 The CPQC Authors
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

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace cpqc {

/// Random source used throughout the search code.
///
/// Wraps std::mt19937_64 but draws uniforms and indices with fixed
/// arithmetic instead of the standard distributions, whose output is
/// implementation-defined. Same seed gives the same stream on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);

  /// Standard normal via Box-Muller (one value per call).
  double normal();

  /// Samples an index with probability proportional to weights[i].
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser; used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t x);

/// Child seed for population member `member` in generation `generation`.
/// Depends only on its arguments, so serial and parallel runs agree.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t generation,
                         std::uint64_t member);

}  // namespace cpqc
