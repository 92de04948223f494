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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cpqc/common/rng.hpp"
#include "cpqc/ir/fixtures.hpp"
#include "cpqc/transpile/decompose.hpp"
#include "cpqc/transpile/report.hpp"
#include "oracle.hpp"

namespace cpqc {
namespace {

using sim::Axis;
using sim::GateKind;
using sim::GateOp;
using transpile::GateCircuit;
using transpile::Stage;

std::vector<GateOp> plain(const GateCircuit& c) {
  std::vector<GateOp> out;
  for (const auto& g : c.gates) out.push_back(g.gate);
  return out;
}

void expect_equivalent(const GateOp& gate, int n) {
  GateCircuit c{n, {}};
  c.add(gate, Stage::Other);
  for (bool merge : {false, true}) {
    const auto d = transpile::decompose(c, {merge});
    for (const auto& g : d.gates) {
      EXPECT_LE(g.gate.controls.size(), 1u);
      if (!g.gate.controls.empty()) {
        EXPECT_EQ(g.gate.kind, GateKind::X);
      }
    }
    EXPECT_LT(oracle::distance_up_to_phase(oracle::unitary(plain(d), n), oracle::unitary(gate, n)),
              1e-9)
        << gate_kind_name(gate.kind) << " with " << gate.controls.size() << " controls";
  }
}

TEST(Decompose, ControlledRotationsMatchOracle) {
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    expect_equivalent(GateOp::controlled_rotation(a, {0}, 1, 0.73), 2);
    expect_equivalent(GateOp::controlled_rotation(a, {2}, 0, -1.9), 3);
    expect_equivalent(GateOp::controlled_rotation(a, {0, 2}, 1, 2.4), 3);
  }
}

TEST(Decompose, MultiControlledNotMatchesOracle) {
  expect_equivalent(GateOp::toffoli(0, 1, 2), 3);
  expect_equivalent(GateOp::toffoli(2, 0, 1), 3);
  GateOp c3x = GateOp::x(3);
  c3x.controls = {0, 1, 2};
  expect_equivalent(c3x, 4);
  GateOp c4x = GateOp::x(0);
  c4x.controls = {1, 2, 3, 4};
  expect_equivalent(c4x, 5);
}

TEST(Decompose, Singles) {
  expect_equivalent(GateOp::u3(0, 0.4, -0.3, 1.2), 1);
  expect_equivalent(GateOp::h(0), 1);
  expect_equivalent(GateOp::sx(0), 1);
}

TEST(Decompose, GateCounts) {
  GateCircuit cx{2, {}};
  cx.add(GateOp::cnot(0, 1), Stage::Other);
  const auto r1 = transpile::report(cx);
  EXPECT_EQ(r1.cnot_count, 1);
  EXPECT_EQ(r1.single_qubit_count, 0);

  GateCircuit cry{2, {}};
  cry.add(GateOp::controlled_rotation(Axis::Y, {0}, 1, 0.5), Stage::Encoding);
  const auto r2 = transpile::report(cry, {false, false});
  EXPECT_EQ(r2.cnot_count, 2);
  EXPECT_EQ(r2.single_qubit_count, 2);
  EXPECT_EQ(r2.stages.at(Stage::Encoding).cnot, 2);
}

TEST(Decompose, U3AnglesRoundTrip) {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const double t = rng.uniform() * std::numbers::pi;
    const double p = (rng.uniform() - 0.5) * 4.0;
    const double l = (rng.uniform() - 0.5) * 4.0;
    const auto m = sim::u3_matrix(t, p, l);
    const auto a = transpile::u3_angles(m);
    const auto back = sim::u3_matrix(a.theta, a.phi, a.lambda);
    oracle::Mat x(2, 2), y(2, 2);
    for (int k = 0; k < 4; ++k) {
      x(k / 2, k % 2) = m[static_cast<std::size_t>(k)];
      y(k / 2, k % 2) = back[static_cast<std::size_t>(k)];
    }
    EXPECT_LT(oracle::distance_up_to_phase(x, y), 1e-10);
  }
  EXPECT_TRUE(transpile::is_identity_up_to_phase(sim::rotation_matrix(Axis::Z, 2.0 * std::numbers::pi)));
  EXPECT_FALSE(transpile::is_identity_up_to_phase(sim::rotation_matrix(Axis::Z, 0.1)));
}

TEST(Report, DepthUsesAsapScheduling) {
  GateCircuit c{3, {}};
  c.add(GateOp::h(0), Stage::Other);
  c.add(GateOp::h(1), Stage::Other);
  c.add(GateOp::cnot(0, 1), Stage::Other);
  c.add(GateOp::h(2), Stage::Other);
  c.add(GateOp::cnot(1, 2), Stage::Other);
  EXPECT_EQ(transpile::circuit_depth(c), 3);
  EXPECT_EQ(transpile::report(GateCircuit{2, {}}).depth, 0);
  EXPECT_EQ(transpile::report(GateCircuit{2, {}}).cnot_count, 0);
}

TEST(Report, LoaderExcludedByDefault) {
  GateCircuit c{2, {}};
  c.add(GateOp::cnot(0, 1), Stage::Loader);
  c.add(GateOp::cnot(1, 0), Stage::Comparator);
  EXPECT_EQ(transpile::report(c).cnot_count, 1);
  EXPECT_EQ(transpile::report(c, {true, true}).cnot_count, 2);
}

TEST(Report, LinearFitAndCsv) {
  const auto fit = transpile::fit_linear({1, 2, 3, 4}, {5, 7, 9, 11});
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, 3.0, 1e-12);
  EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
  const auto rows = transpile::scaling_sweep(
      [](int n) {
        GateCircuit c{n + 1, {}};
        for (int i = 0; i < n; ++i) c.add(GateOp::cnot(i, n), Stage::Other);
        return c;
      },
      {2, 3}, "chain");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1].cnot, 3);
  const std::string csv = transpile::sweep_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,backend,cnot,depth,single_qubit");
}

TEST(Report, FromCircuitOffsetsFeatures) {
  const auto f = ir::load_fixture("call_fig3");
  const auto g = transpile::from_circuit(f.circuit, {{0.5}, f.theta});
  EXPECT_EQ(g.num_qubits, f.circuit.num_qubits);
  int enc = 0;
  for (const auto& s : g.gates) enc += s.stage == Stage::Encoding;
  EXPECT_EQ(static_cast<std::size_t>(enc), f.circuit.encoding_count());
}

}  // namespace
}  // namespace cpqc
