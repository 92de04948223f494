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

#include <optional>
#include <utility>
#include <vector>

#include "cpqc/common/rng.hpp"
#include "cpqc/ir/circuit.hpp"

namespace cpqc::search {

enum class TemplateKind {
  /// Trainable R_a(theta); identity at theta = 0.
  Rotation,
  /// CX(a, b); not identity-insertable.
  Cnot,
  /// CX(a, b) R_a(theta)_b CX(a, b); entangling, identity at theta = 0.
  RotationPair,
  /// Fixed sqrt(X); only offered in native mode.
  Sx,
  /// R_a(x_feature); changes the circuit when inserted.
  Encoding,
};

struct BlockTemplate {
  TemplateKind kind = TemplateKind::Rotation;
  sim::Axis axis = sim::Axis::Y;
  int feature = 0;

  bool two_qubit() const { return kind == TemplateKind::Cnot || kind == TemplateKind::RotationPair; }
  bool identity_insertable() const {
    return kind == TemplateKind::Rotation || kind == TemplateKind::RotationPair;
  }

  friend bool operator==(const BlockTemplate&, const BlockTemplate&) = default;
};

struct BlockPool {
  std::vector<BlockTemplate> candidates;
  /// Allowed qubit pairs (either orientation); all pairs when unset.
  std::optional<std::vector<std::pair<int, int>>> connectivity;
  bool native_only = false;

  /// RX/RY/RZ rotations, CNOT, Y and Z rotation pairs and one encoding per
  /// feature and axis. Native mode keeps RZ, SX, CNOT and Z encodings only.
  static BlockPool standard(int num_features, bool native_only = false);

  /// Throws InvalidArgument for an empty pool, a feature index outside
  /// [0, num_features) or a connectivity pair outside the register.
  void validate(int num_qubits, int num_features) const;
};

struct Mutation {
  ir::Circuit circuit;
  std::vector<double> theta;
  BlockTemplate block;
  std::size_t position = 0;
  std::vector<int> qubits;
};

/// Inserts one block as a new layer at a uniformly drawn boundary
/// (0..layers). Trainable slots start at 0, so identity-insertable blocks
/// leave the model unchanged. Throws InvalidArgument when no template has
/// an eligible placement.
Mutation sample_mutation(const ir::Circuit& circuit, const std::vector<double>& theta,
                         const BlockPool& pool, Rng& rng);

/// The layer a template produces on `qubits` (control first for pairs),
/// with slots numbered from 0.
ir::Layer instantiate(const BlockTemplate& block, const std::vector<int>& qubits);

}  // namespace cpqc::search
