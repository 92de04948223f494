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

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "cpqc/sim/gate.hpp"
#include "cpqc/sim/observable.hpp"

namespace cpqc::ir {

/// R_axis(x_feature) on `target`. Encodings are always single rotations.
struct EncodingBlock {
  int feature = 0;
  sim::Axis axis = sim::Axis::Z;
  int target = 0;

  friend bool operator==(const EncodingBlock&, const EncodingBlock&) = default;
};

/// Trainable rotation R_axis(theta_slot), optionally controlled.
/// theta_slot = 0 is the identity, so every such block is
/// identity-insertable.
struct ParamBlock {
  sim::Axis axis = sim::Axis::Y;
  int slot = 0;
  int target = 0;
  std::vector<int> controls;

  friend bool operator==(const ParamBlock&, const ParamBlock&) = default;
};

/// A gate with no free parameter: SX, X, H, CNOT, Toffoli or a rotation by
/// a literal angle.
struct FixedBlock {
  sim::GateOp gate;

  friend bool operator==(const FixedBlock&, const FixedBlock&) = default;
};

using Block = std::variant<EncodingBlock, ParamBlock, FixedBlock>;

/// Qubits the block touches, target last.
std::vector<int> block_qubits(const Block& block);
int block_target(const Block& block);
bool is_two_qubit(const Block& block);

struct Layer {
  std::vector<Block> blocks;

  friend bool operator==(const Layer&, const Layer&) = default;
};

/// Position of a block: layer index and index inside the layer.
struct BlockRef {
  std::size_t layer = 0;
  std::size_t index = 0;

  friend bool operator==(const BlockRef&, const BlockRef&) = default;
};

/// Layered PQC: prod_l S_l(x) W_l(theta^l), with the first layer applied
/// first. The readout is the mean of sigma_Z over `measured`.
struct Circuit {
  int num_qubits = 1;
  int num_features = 0;
  int num_params = 0;
  std::vector<Layer> layers;
  std::vector<int> measured{0};

  /// Throws InvalidArgument unless every index is in range, every slot in
  /// [0, num_params) is used exactly once and controls are disjoint from
  /// targets.
  void validate() const;

  std::size_t block_count() const;
  std::vector<BlockRef> block_refs() const;
  const Block& at(BlockRef ref) const { return layers[ref.layer].blocks[ref.index]; }

  std::size_t encoding_count() const;
  sim::Observable observable() const;

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

struct Binding {
  std::vector<double> features;
  std::vector<double> params;
};

/// Flat gate list in application order. Throws InvalidArgument on length
/// mismatch or non-finite binding entries.
std::vector<sim::GateOp> to_gate_sequence(const Circuit& circuit,
                                          const Binding& binding);

/// Same circuit with every block in its own layer.
Circuit split_layers(const Circuit& circuit);

/// Builds a circuit with one block per layer from a flat block list.
Circuit from_blocks(int num_qubits, int num_features, int num_params,
                    std::vector<Block> blocks, std::vector<int> measured = {0});

/// Inserts `layer` before layer `position` (0..layers.size()). Parameter
/// slots inside `layer` are numbered relative to the layer (0, 1, ...) and
/// get appended after the existing ones; `params` grows with `initial`
/// values for them.
void insert_layer(Circuit& circuit, std::vector<double>& params,
                  std::size_t position, Layer layer,
                  std::span<const double> initial);

/// Removes one block. A removed ParamBlock drops its slot: later slots are
/// renumbered down and `params` loses the entry. Empty layers are erased.
void remove_block(Circuit& circuit, std::vector<double>& params, BlockRef ref);

}  // namespace cpqc::ir
