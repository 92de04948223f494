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

#include "cpqc/search/pool.hpp"

#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::search {
namespace {

using sim::Axis;

std::vector<std::pair<int, int>> ordered_pairs(const BlockPool& pool, int num_qubits) {
  std::vector<std::pair<int, int>> pairs;
  if (pool.connectivity) {
    for (const auto& [a, b] : *pool.connectivity) {
      if (a == b) continue;
      pairs.emplace_back(a, b);
      pairs.emplace_back(b, a);
    }
    return pairs;
  }
  for (int a = 0; a < num_qubits; ++a) {
    for (int b = 0; b < num_qubits; ++b) {
      if (a != b) pairs.emplace_back(a, b);
    }
  }
  return pairs;
}

}  // namespace

BlockPool BlockPool::standard(int num_features, bool native_only) {
  BlockPool pool;
  pool.native_only = native_only;
  if (native_only) {
    pool.candidates.push_back({TemplateKind::Rotation, Axis::Z, 0});
    pool.candidates.push_back({TemplateKind::Sx, Axis::X, 0});
    pool.candidates.push_back({TemplateKind::Cnot, Axis::X, 0});
    pool.candidates.push_back({TemplateKind::RotationPair, Axis::Z, 0});
    for (int k = 0; k < num_features; ++k) {
      pool.candidates.push_back({TemplateKind::Encoding, Axis::Z, k});
    }
    return pool;
  }
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) pool.candidates.push_back({TemplateKind::Rotation, a, 0});
  pool.candidates.push_back({TemplateKind::Cnot, Axis::X, 0});
  for (Axis a : {Axis::Y, Axis::Z}) pool.candidates.push_back({TemplateKind::RotationPair, a, 0});
  for (int k = 0; k < num_features; ++k) {
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      pool.candidates.push_back({TemplateKind::Encoding, a, k});
    }
  }
  return pool;
}

void BlockPool::validate(int num_qubits, int num_features) const {
  if (candidates.empty()) throw InvalidArgument("block pool is empty");
  for (const BlockTemplate& t : candidates) {
    if (t.kind == TemplateKind::Encoding && (t.feature < 0 || t.feature >= num_features)) {
      throw InvalidArgument("block pool encoding references feature " +
                            std::to_string(t.feature));
    }
  }
  if (connectivity) {
    for (const auto& [a, b] : *connectivity) {
      if (a < 0 || b < 0 || a >= num_qubits || b >= num_qubits || a == b) {
        throw InvalidArgument("connectivity pair (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is invalid");
      }
    }
  }
}

ir::Layer instantiate(const BlockTemplate& block, const std::vector<int>& qubits) {
  ir::Layer layer;
  switch (block.kind) {
    case TemplateKind::Rotation:
      layer.blocks.push_back(ir::ParamBlock{block.axis, 0, qubits.at(0), {}});
      break;
    case TemplateKind::Sx:
      layer.blocks.push_back(ir::FixedBlock{sim::GateOp::sx(qubits.at(0))});
      break;
    case TemplateKind::Encoding:
      layer.blocks.push_back(ir::EncodingBlock{block.feature, block.axis, qubits.at(0)});
      break;
    case TemplateKind::Cnot:
      layer.blocks.push_back(ir::FixedBlock{sim::GateOp::cnot(qubits.at(0), qubits.at(1))});
      break;
    case TemplateKind::RotationPair:
      layer.blocks.push_back(ir::FixedBlock{sim::GateOp::cnot(qubits.at(0), qubits.at(1))});
      layer.blocks.push_back(ir::ParamBlock{block.axis, 0, qubits.at(1), {}});
      layer.blocks.push_back(ir::FixedBlock{sim::GateOp::cnot(qubits.at(0), qubits.at(1))});
      break;
  }
  return layer;
}

Mutation sample_mutation(const ir::Circuit& circuit, const std::vector<double>& theta,
                         const BlockPool& pool, Rng& rng) {
  pool.validate(circuit.num_qubits, circuit.num_features);
  const auto pairs = ordered_pairs(pool, circuit.num_qubits);
  std::vector<const BlockTemplate*> eligible;
  for (const BlockTemplate& t : pool.candidates) {
    if (!t.two_qubit() || !pairs.empty()) eligible.push_back(&t);
  }
  if (eligible.empty()) {
    throw InvalidArgument("sample_mutation: no template has an eligible qubit placement");
  }
  Mutation m;
  m.block = *eligible[rng.index(eligible.size())];
  if (m.block.two_qubit()) {
    const auto& [a, b] = pairs[rng.index(pairs.size())];
    m.qubits = {a, b};
  } else {
    m.qubits = {static_cast<int>(rng.index(static_cast<std::size_t>(circuit.num_qubits)))};
  }
  m.position = rng.index(circuit.layers.size() + 1);
  m.circuit = circuit;
  m.theta = theta;
  ir::Layer layer = instantiate(m.block, m.qubits);
  std::vector<double> initial;
  for (const ir::Block& b : layer.blocks) {
    if (std::holds_alternative<ir::ParamBlock>(b)) initial.push_back(0.0);
  }
  ir::insert_layer(m.circuit, m.theta, m.position, std::move(layer), initial);
  return m;
}

}  // namespace cpqc::search
