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

#include <string_view>
#include <vector>

#include "cpqc/ir/circuit.hpp"
#include "cpqc/sim/gate.hpp"

namespace cpqc::transpile {

/// Which part of a circuit a gate belongs to, for per-stage counts.
enum class Stage { Encoding, Parameterized, Comparator, Adder, PayoffRotation, Loader, Other };

std::string_view stage_name(Stage stage);
std::vector<Stage> all_stages();

struct StagedGate {
  sim::GateOp gate;
  Stage stage = Stage::Other;
};

/// A flat gate-level circuit.
struct GateCircuit {
  int num_qubits = 1;
  std::vector<StagedGate> gates;

  void add(sim::GateOp gate, Stage stage) { gates.push_back({std::move(gate), stage}); }
  void append(const std::vector<sim::GateOp>& ops, Stage stage);
};

/// Flattens a bound circuit. Encoding blocks and any gate touching one of
/// the first `control_qubits` qubits are tagged Encoding, the rest
/// Parameterized.
GateCircuit from_circuit(const ir::Circuit& circuit, const ir::Binding& binding,
                         int control_qubits = 0);

struct DecomposeOptions {
  /// Fuse runs of single-qubit gates into one U3 and drop identities.
  bool merge_single_qubit = true;
};

/// Rewrites every gate into CNOT and U3:
///  - single-qubit gates become U3;
///  - C-R_a(t) becomes R_a(t/2), CX, R_a(-t/2), CX (X axis conjugated by H);
///  - Toffoli becomes the 6-CNOT textbook circuit;
///  - C^k-R_a(t), k >= 2, becomes R_a(t/2), C^kX, R_a(-t/2), C^kX;
///  - C^kX, k >= 3, becomes H C^kZ H with C^kZ as a parity phase polynomial.
/// Other controlled gates throw UnsupportedGate. The result equals the
/// input up to global phase.
GateCircuit decompose(const GateCircuit& circuit, const DecomposeOptions& options = {});

/// U3 parameters (theta, phi, lambda) of a 2x2 unitary, dropping the
/// global phase.
struct U3Angles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};
U3Angles u3_angles(const sim::Matrix2& m);

/// True when m is the identity up to a global phase.
bool is_identity_up_to_phase(const sim::Matrix2& m, double tol = 1e-12);

}  // namespace cpqc::transpile
