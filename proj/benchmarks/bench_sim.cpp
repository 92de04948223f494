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

#include "cpqc/sim/statevector.hpp"
#include "cpqc/train/model.hpp"
#include "cpqc/search/structure_learning.hpp"

namespace {

using namespace cpqc;

void BM_RotationApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sim::Statevector s(n);
  const auto gate = sim::GateOp::rotation(sim::Axis::Y, n / 2, 0.3);
  for (auto _ : state) {
    s.apply(gate);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_RotationApply)->DenseRange(10, 20, 5);

void BM_ControlledRotationApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sim::Statevector s(n);
  const auto gate = sim::GateOp::controlled_rotation(sim::Axis::Z, {0, 1}, n - 1, 0.7);
  for (auto _ : state) {
    s.apply(gate);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_ControlledRotationApply)->DenseRange(10, 20, 5);

void BM_ModelEvaluate(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const ir::Circuit c = search::initial_circuit(q, 1);
  const train::CompiledCircuit model(c);
  const std::vector<double> theta(static_cast<std::size_t>(c.num_params), 0.2);
  const std::vector<double> x{0.5};
  for (auto _ : state) benchmark::DoNotOptimize(model.evaluate(x, theta));
}
BENCHMARK(BM_ModelEvaluate)->Arg(3)->Arg(6);

}  // namespace
