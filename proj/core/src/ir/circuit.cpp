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

#include "cpqc/ir/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"
#include "cpqc/sim/statevector.hpp"

namespace cpqc::ir {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidArgument(std::string("binding ") + what + " contains a non-finite value");
    }
  }
}

}  // namespace

std::vector<int> block_qubits(const Block& block) {
  return std::visit(
      Overloaded{
          [](const EncodingBlock& b) { return std::vector<int>{b.target}; },
          [](const ParamBlock& b) {
            std::vector<int> q = b.controls;
            q.push_back(b.target);
            return q;
          },
          [](const FixedBlock& b) {
            std::vector<int> q = b.gate.controls;
            q.push_back(b.gate.target);
            return q;
          },
      },
      block);
}

int block_target(const Block& block) {
  return std::visit(Overloaded{
                        [](const EncodingBlock& b) { return b.target; },
                        [](const ParamBlock& b) { return b.target; },
                        [](const FixedBlock& b) { return b.gate.target; },
                    },
                    block);
}

bool is_two_qubit(const Block& block) { return block_qubits(block).size() >= 2; }

void Circuit::validate() const {
  if (num_qubits < 1) throw InvalidArgument("circuit: num_qubits must be >= 1");
  if (num_features < 0 || num_params < 0) {
    throw InvalidArgument("circuit: negative feature or parameter count");
  }
  if (measured.empty()) throw InvalidArgument("circuit: no measured qubits");
  for (int q : measured) {
    if (q < 0 || q >= num_qubits) {
      throw InvalidArgument("circuit: measured qubit " + std::to_string(q) + " out of range");
    }
  }
  std::vector<int> slot_uses(static_cast<std::size_t>(num_params), 0);
  for (const Layer& layer : layers) {
    for (const Block& block : layer.blocks) {
      const auto qubits = block_qubits(block);
      std::uint64_t seen = 0;
      for (int q : qubits) {
        if (q < 0 || q >= num_qubits) {
          throw InvalidArgument("circuit: qubit " + std::to_string(q) + " out of range");
        }
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (seen & bit) throw InvalidArgument("circuit: block repeats qubit " + std::to_string(q));
        seen |= bit;
      }
      if (const auto* e = std::get_if<EncodingBlock>(&block)) {
        if (e->feature < 0 || e->feature >= num_features) {
          throw InvalidArgument("circuit: feature index " + std::to_string(e->feature) +
                                " out of range");
        }
      } else if (const auto* p = std::get_if<ParamBlock>(&block)) {
        if (p->slot < 0 || p->slot >= num_params) {
          throw InvalidArgument("circuit: parameter slot " + std::to_string(p->slot) +
                                " out of range");
        }
        ++slot_uses[static_cast<std::size_t>(p->slot)];
      } else {
        const auto& g = std::get<FixedBlock>(block).gate;
        if (!std::isfinite(g.angle) || !std::isfinite(g.phi) || !std::isfinite(g.lambda)) {
          throw InvalidArgument("circuit: non-finite literal angle");
        }
      }
    }
  }
  for (std::size_t s = 0; s < slot_uses.size(); ++s) {
    if (slot_uses[s] != 1) {
      throw InvalidArgument("circuit: parameter slot " + std::to_string(s) + " used " +
                            std::to_string(slot_uses[s]) + " times");
    }
  }
}

std::size_t Circuit::block_count() const {
  std::size_t n = 0;
  for (const Layer& layer : layers) n += layer.blocks.size();
  return n;
}

std::vector<BlockRef> Circuit::block_refs() const {
  std::vector<BlockRef> refs;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (std::size_t i = 0; i < layers[l].blocks.size(); ++i) refs.push_back({l, i});
  }
  return refs;
}

std::size_t Circuit::encoding_count() const {
  std::size_t n = 0;
  for (const Layer& layer : layers) {
    for (const Block& b : layer.blocks) n += std::holds_alternative<EncodingBlock>(b);
  }
  return n;
}

sim::Observable Circuit::observable() const { return sim::Observable::mean_z(measured); }

std::vector<sim::GateOp> to_gate_sequence(const Circuit& circuit, const Binding& binding) {
  if (binding.features.size() != static_cast<std::size_t>(circuit.num_features)) {
    throw InvalidArgument("to_gate_sequence: expected " + std::to_string(circuit.num_features) +
                          " features, got " + std::to_string(binding.features.size()));
  }
  if (binding.params.size() != static_cast<std::size_t>(circuit.num_params)) {
    throw InvalidArgument("to_gate_sequence: expected " + std::to_string(circuit.num_params) +
                          " parameters, got " + std::to_string(binding.params.size()));
  }
  check_finite(binding.features, "features");
  check_finite(binding.params, "parameters");

  std::vector<sim::GateOp> gates;
  gates.reserve(circuit.block_count());
  for (const Layer& layer : circuit.layers) {
    for (const Block& block : layer.blocks) {
      gates.push_back(std::visit(
          Overloaded{
              [&](const EncodingBlock& b) {
                return sim::GateOp::rotation(b.axis, b.target,
                                             binding.features[static_cast<std::size_t>(b.feature)]);
              },
              [&](const ParamBlock& b) {
                return sim::GateOp::controlled_rotation(
                    b.axis, b.controls, b.target,
                    binding.params[static_cast<std::size_t>(b.slot)]);
              },
              [](const FixedBlock& b) { return b.gate; },
          },
          block));
    }
  }
  return gates;
}

Circuit split_layers(const Circuit& circuit) {
  Circuit out = circuit;
  out.layers.clear();
  for (const Layer& layer : circuit.layers) {
    for (const Block& b : layer.blocks) out.layers.push_back(Layer{{b}});
  }
  return out;
}

Circuit from_blocks(int num_qubits, int num_features, int num_params, std::vector<Block> blocks,
                    std::vector<int> measured) {
  Circuit c;
  c.num_qubits = num_qubits;
  c.num_features = num_features;
  c.num_params = num_params;
  c.measured = std::move(measured);
  for (Block& b : blocks) c.layers.push_back(Layer{{std::move(b)}});
  return c;
}

void insert_layer(Circuit& circuit, std::vector<double>& params, std::size_t position,
                  Layer layer, std::span<const double> initial) {
  if (position > circuit.layers.size()) {
    throw InvalidArgument("insert_layer: position out of range");
  }
  if (params.size() != static_cast<std::size_t>(circuit.num_params)) {
    throw InvalidArgument("insert_layer: parameter vector length mismatch");
  }
  int added = 0;
  for (Block& b : layer.blocks) {
    if (auto* p = std::get_if<ParamBlock>(&b)) {
      p->slot += circuit.num_params;
      ++added;
    }
  }
  if (initial.size() != static_cast<std::size_t>(added)) {
    throw InvalidArgument("insert_layer: expected " + std::to_string(added) +
                          " initial values, got " + std::to_string(initial.size()));
  }
  params.insert(params.end(), initial.begin(), initial.end());
  circuit.num_params += added;
  circuit.layers.insert(circuit.layers.begin() + static_cast<std::ptrdiff_t>(position),
                        std::move(layer));
}

void remove_block(Circuit& circuit, std::vector<double>& params, BlockRef ref) {
  if (ref.layer >= circuit.layers.size() ||
      ref.index >= circuit.layers[ref.layer].blocks.size()) {
    throw InvalidArgument("remove_block: reference out of range");
  }
  auto& blocks = circuit.layers[ref.layer].blocks;
  if (const auto* p = std::get_if<ParamBlock>(&blocks[ref.index])) {
    const int slot = p->slot;
    params.erase(params.begin() + slot);
    --circuit.num_params;
    for (Layer& layer : circuit.layers) {
      for (Block& b : layer.blocks) {
        if (auto* q = std::get_if<ParamBlock>(&b); q && q->slot > slot) --q->slot;
      }
    }
  }
  blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(ref.index));
  if (blocks.empty()) {
    circuit.layers.erase(circuit.layers.begin() + static_cast<std::ptrdiff_t>(ref.layer));
  }
}

}  // namespace cpqc::ir
