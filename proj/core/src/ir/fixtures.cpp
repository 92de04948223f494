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

#include "cpqc/ir/fixtures.hpp"

#include "cpqc/common/errors.hpp"

namespace cpqc::ir {
namespace {

using sim::Axis;
using sim::GateOp;

// Terse constructors so each circuit column reads as one line.
Block enc(int feature, Axis axis, int q) { return EncodingBlock{feature, axis, q}; }
Block par(Axis axis, int slot, int q) { return ParamBlock{axis, slot, q, {}}; }
Block sx(int q) { return FixedBlock{GateOp::sx(q)}; }
Block x(int q) { return FixedBlock{GateOp::x(q)}; }
Block cx(int c, int t) { return FixedBlock{GateOp::cnot(c, t)}; }

Circuit make(int qubits, int features, int params, std::vector<std::vector<Block>> columns) {
  Circuit c;
  c.num_qubits = qubits;
  c.num_features = features;
  c.num_params = params;
  c.measured = {0};
  for (auto& col : columns) c.layers.push_back(Layer{std::move(col)});
  c.validate();
  return c;
}

// Columns run left to right. The meter on the top wire is
// read as a terminal sigma_Z readout.
Fixture call_fig3() {
  constexpr Axis X = Axis::X, Y = Axis::Y, Z = Axis::Z;
  Fixture f;
  f.name = "call_fig3";
  f.theta = {0.93963, 2.51976, -0.30702, -0.22985, -0.302, -0.09293, 0.15291, 0.05979};
  f.circuit = make(3, 1, 8,
                   {
                       {sx(1), par(Y, 3, 2)},
                       {enc(0, Z, 1)},
                       {enc(0, Z, 1)},
                       {sx(1)},
                       {enc(0, Z, 1)},
                       {sx(1)},
                       {cx(2, 1)},
                       {sx(1)},
                       {par(Z, 0, 1)},
                       {sx(1)},
                       {x(1)},
                       {cx(2, 1)},
                       {enc(0, Z, 1), enc(0, Z, 2)},
                       {sx(1), par(X, 4, 2)},
                       {cx(1, 0)},
                       {enc(0, Z, 0), cx(1, 2)},
                       {enc(0, Z, 1), par(Y, 5, 2)},
                       {cx(1, 0)},
                       {par(X, 1, 1)},
                       {par(Y, 2, 1)},
                       {cx(1, 0)},
                       {cx(1, 2)},
                       {par(Z, 6, 2)},
                       {enc(0, X, 2)},
                       {par(Y, 7, 2)},
                       {cx(2, 1)},
                       {cx(1, 0)},
                   });
  return f;
}

Fixture basket_figA2() {
  constexpr Axis X = Axis::X, Y = Axis::Y, Z = Axis::Z;
  Fixture f;
  f.name = "basket_figA2";
  f.theta = {1.70789, -1.71191, -1.11194, -0.72190, -0.74404,
             1.40678, 0.67897,  0.17417,  -0.16803};
  f.circuit = make(4, 2, 9,
                   {
                       {par(Y, 0, 2)},
                       {enc(0, X, 2)},
                       {par(Z, 1, 2)},
                       {cx(2, 3)},
                       {par(Y, 2, 2)},
                       {enc(0, Z, 2)},
                       {enc(1, Z, 2)},
                       {cx(2, 1)},
                       {cx(1, 3)},
                       {par(Z, 8, 1), enc(1, Y, 2)},
                       {cx(1, 3)},
                       {cx(2, 1), par(Y, 5, 3)},
                       {par(Z, 3, 2), enc(0, Z, 3)},
                       {par(Y, 4, 2), par(Y, 6, 3)},
                       {enc(1, Z, 3)},
                       {par(Y, 7, 3)},
                       {cx(3, 2)},
                       {cx(2, 1)},
                       {cx(1, 0)},
                   });
  return f;
}

// Features: x0 -> 0, x1 -> 1, w1 -> 2.
Fixture basket_var_weight_figA4() {
  constexpr Axis X = Axis::X, Y = Axis::Y, Z = Axis::Z;
  Fixture f;
  f.name = "basket_var_weight_figA4";
  f.theta = {1.34793,  1.39065,  0.56594,  0.40454,  -2.45389, 1.54508,
             2.17214,  -0.50158, -0.63069, -1.14638, -0.44283, 0.44037,
             -0.42722, -0.20744, -0.23896, 0.10707};
  f.circuit = make(2, 3, 16,
                   {
                       {enc(2, X, 0), par(Y, 6, 1)},
                       {cx(0, 1)},
                       {enc(0, Z, 1)},
                       {sx(1)},
                       {par(Z, 7, 1)},
                       {sx(1)},
                       {x(1)},
                       {cx(0, 1)},
                       {par(Y, 0, 0), par(Y, 8, 1)},
                       {enc(1, Z, 0)},
                       {par(Y, 1, 0)},
                       {cx(0, 1)},
                       {par(X, 2, 0), par(Z, 9, 1)},
                       {cx(0, 1)},
                       {par(X, 3, 0), par(Z, 10, 1)},
                       {enc(0, Z, 1)},
                       {par(Y, 11, 1)},
                       {cx(1, 0)},
                       {par(Y, 4, 0)},
                       {cx(1, 0)},
                       {enc(1, Z, 1)},
                       {par(Y, 12, 1)},
                       {enc(1, Z, 1)},
                       {cx(0, 1)},
                       {par(Z, 13, 1)},
                       {cx(0, 1)},
                       {par(X, 5, 0), par(Z, 14, 1)},
                       {cx(0, 1)},
                       {par(X, 15, 1)},
                       {cx(0, 1)},
                       {cx(1, 0)},
                   });
  return f;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"call_fig3", "basket_figA2", "basket_var_weight_figA4"};
}

Fixture load_fixture(std::string_view name) {
  if (name == "call_fig3") return call_fig3();
  if (name == "basket_figA2") return basket_figA2();
  if (name == "basket_var_weight_figA4") return basket_var_weight_figA4();
  throw InvalidArgument("unknown fixture '" + std::string(name) + "'");
}

}  // namespace cpqc::ir
