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

#include <span>
#include <vector>

#include "cpqc/cond/conditional.hpp"
#include "cpqc/sim/gate.hpp"

namespace cpqc::cond {

/// Uniformly controlled RY: for each control pattern i (first control most
/// significant) applies RY(angles[i]) to `target`. Uses 2^k CNOTs and 2^k
/// RYs for k controls.
std::vector<sim::GateOp> uniformly_controlled_ry(std::span<const int> controls, int target,
                                                 std::span<const double> angles);

/// Gates taking |0...0> on `qubits` (most significant first) to
/// sum_i sqrt(p_i)|i>, built qubit by qubit from conditional probabilities.
/// A uniform p becomes a Hadamard layer.
std::vector<sim::GateOp> state_preparation(std::span<const double> probs,
                                           std::span<const int> qubits);

/// Loader P = P_1 (x) ... (x) P_K for the control registers of `layout`.
std::vector<sim::GateOp> load_distribution(const ProductDistribution& dist,
                                           const ControlLayout& layout);

}  // namespace cpqc::cond
