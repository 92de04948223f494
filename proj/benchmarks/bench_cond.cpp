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

#include <benchmark/benchmark.h>

#include "cpqc/cond/conditional.hpp"
#include "cpqc/ir/fixtures.hpp"

namespace {

using namespace cpqc;

void BM_ConditionalExpectation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = cond::ControlLayout::half_turn({n}, f.circuit.num_qubits);
  const auto cc = cond::make_conditional(f.circuit, layout);
  const auto dist = cond::ProductDistribution::uniform(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cond::conditional_expectation(cc, dist, f.theta));
  }
}
BENCHMARK(BM_ConditionalExpectation)->DenseRange(4, 12, 4);

void BM_WeightedSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = ir::load_fixture("call_fig3");
  const auto layout = cond::ControlLayout::half_turn({n}, f.circuit.num_qubits);
  const auto dist = cond::ProductDistribution::uniform(layout);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cond::weighted_sum(f.circuit, layout, dist, f.theta));
  }
}
BENCHMARK(BM_WeightedSum)->DenseRange(4, 12, 4);

}  // namespace
