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
#include "cpqc/finance/arithmetic.hpp"
#include "cpqc/ir/fixtures.hpp"
#include "cpqc/transpile/report.hpp"

namespace {

using namespace cpqc;

void BM_CpqcReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = ir::load_fixture("basket_figA2");
  const auto layout = cond::ControlLayout::half_turn({n / 2, n - n / 2}, f.circuit.num_qubits);
  const auto cc = cond::make_conditional(f.circuit, layout);
  const auto gates = transpile::from_circuit(cc.circuit, {{}, f.theta}, layout.control_qubits());
  for (auto _ : state) benchmark::DoNotOptimize(transpile::report(gates).cnot_count);
}
BENCHMARK(BM_CpqcReport)->Arg(8)->Arg(14);

void BM_ArithmeticBuildAndReport(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = finance::PriceGrid::standard(finance::MarketModel{}, n);
  for (auto _ : state) {
    const auto ac = finance::build_arithmetic_circuit({finance::PayoffKind::Call, 100.0, {}}, {grid});
    benchmark::DoNotOptimize(transpile::report(ac.circuit).cnot_count);
  }
}
BENCHMARK(BM_ArithmeticBuildAndReport)->Arg(8)->Arg(14);

}  // namespace
