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

#include <numbers>
#include <vector>

#include "cpqc/common/rng.hpp"
#include "cpqc/ir/circuit.hpp"

namespace cpqc::testing {

inline sim::Axis random_axis(Rng& rng) {
  return static_cast<sim::Axis>(rng.index(3));
}

/// Random rotation-encoded PQC: every feature is encoded at least once,
/// mixed with trainable rotations, CNOTs and literal gates.
inline ir::Circuit random_circuit(Rng& rng, int num_qubits, int num_features, int blocks,
                                  bool controlled_params = false) {
  std::vector<ir::Block> list;
  int slots = 0;
  for (int k = 0; k < num_features; ++k) {
    list.push_back(ir::EncodingBlock{k, random_axis(rng), static_cast<int>(rng.index(num_qubits))});
  }
  for (int b = 0; b < blocks; ++b) {
    const int target = static_cast<int>(rng.index(num_qubits));
    const std::size_t pick = rng.index(num_qubits > 1 ? 5 : 3);
    if (pick == 0 && num_features > 0) {
      list.push_back(ir::EncodingBlock{static_cast<int>(rng.index(num_features)), random_axis(rng),
                                       target});
    } else if (pick <= 2 || num_qubits == 1) {
      list.push_back(ir::ParamBlock{random_axis(rng), slots++, target, {}});
    } else {
      const int other = (target + 1 + static_cast<int>(rng.index(num_qubits - 1))) % num_qubits;
      if (pick == 3) {
        list.push_back(ir::FixedBlock{sim::GateOp::cnot(other, target)});
      } else if (controlled_params) {
        list.push_back(ir::ParamBlock{random_axis(rng), slots++, target, {other}});
      } else {
        list.push_back(ir::FixedBlock{sim::GateOp::h(target)});
      }
    }
  }
  // Shuffle so encodings are not all up front.
  for (std::size_t i = list.size(); i > 1; --i) std::swap(list[i - 1], list[rng.index(i)]);
  // Slots must appear once each; renumbering in order keeps validate happy.
  int next = 0;
  for (auto& b : list) {
    if (auto* p = std::get_if<ir::ParamBlock>(&b)) p->slot = next++;
  }
  std::vector<int> measured{static_cast<int>(rng.index(num_qubits))};
  return ir::from_blocks(num_qubits, num_features, slots, std::move(list), measured);
}

inline std::vector<double> random_angles(Rng& rng, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (double& v : out) v = std::numbers::pi * (2.0 * rng.uniform() - 1.0);
  return out;
}

/// Random probability vector with full support.
inline std::vector<double> random_distribution(Rng& rng, std::size_t size) {
  std::vector<double> p(size);
  double total = 0.0;
  for (double& v : p) total += v = 0.05 + rng.uniform();
  for (double& v : p) v /= total;
  return p;
}

}  // namespace cpqc::testing
