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

#include <vector>

#include "cpqc/ir/circuit.hpp"
#include "cpqc/train/model.hpp"

namespace cpqc::search {

/// Protected blocks are never removed:
///  - a two-qubit block whose removal disconnects some qubit from the
///    measured qubits in the interaction graph;
///  - the only trainable block on a qubit connected to a measured qubit.
bool is_protected(const ir::Circuit& circuit, ir::BlockRef ref);

struct ReduceResult {
  ir::Circuit circuit;
  std::vector<double> theta;
  double cost = 0.0;
  int removed = 0;
};

/// One reverse-order pass. A block is dropped when the cost with theta
/// held fixed does not rise, or stays below (1 + rho_max) times the cost
/// at entry.
ReduceResult reduce(const ir::Circuit& circuit, const std::vector<double>& theta,
                    const train::TrainingProblem& problem, double rho_max,
                    bool protect = true);

}  // namespace cpqc::search
