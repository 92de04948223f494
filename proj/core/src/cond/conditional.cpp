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

#include "cpqc/cond/conditional.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cpqc/common/errors.hpp"
#include "cpqc/train/model.hpp"

namespace cpqc::cond {
namespace {

void check_compatible(const ir::Circuit& circuit, const ControlLayout& layout) {
  circuit.validate();
  layout.validate();
  if (layout.num_features() != circuit.num_features) {
    throw InvalidArgument("layout has " + std::to_string(layout.num_features()) +
                          " registers, circuit has " + std::to_string(circuit.num_features) +
                          " features");
  }
  if (layout.target_size != circuit.num_qubits) {
    throw InvalidArgument("layout target size " + std::to_string(layout.target_size) +
                          " differs from circuit width " + std::to_string(circuit.num_qubits));
  }
}

ir::Block shift_block(const ir::Block& block, int n) {
  if (const auto* p = std::get_if<ir::ParamBlock>(&block)) {
    ir::ParamBlock out = *p;
    out.target += n;
    for (int& c : out.controls) c += n;
    return out;
  }
  if (const auto* f = std::get_if<ir::FixedBlock>(&block)) {
    ir::FixedBlock out = *f;
    out.gate.target += n;
    for (int& c : out.gate.controls) c += n;
    return out;
  }
  throw UnsupportedEncoding("encoding block cannot be copied onto the target register");
}

// Shared skeleton: copies every non-encoding block and lets `emit` replace
// each encoding block.
template <class Emit>
ConditionalCircuit build(const ir::Circuit& circuit, const ControlLayout& layout, Emit emit) {
  check_compatible(circuit, layout);
  const int n = layout.control_qubits();
  ConditionalCircuit cc;
  cc.layout = layout;
  cc.circuit.num_qubits = n + circuit.num_qubits;
  cc.circuit.num_features = 0;
  cc.circuit.num_params = circuit.num_params;
  cc.circuit.measured.clear();
  for (int q : circuit.measured) cc.circuit.measured.push_back(q + n);
  for (const ir::Layer& layer : circuit.layers) {
    // Each encoding becomes its own run of layers; neighbours keep their
    // order so overlapping blocks inside a layer stay sequential.
    ir::Layer rest;
    bool emitted = false;
    for (const ir::Block& block : layer.blocks) {
      if (const auto* e = std::get_if<ir::EncodingBlock>(&block)) {
        if (!rest.blocks.empty()) cc.circuit.layers.push_back(std::exchange(rest, {}));
        emit(*e, n, cc.circuit.layers);
        emitted = true;
      } else {
        rest.blocks.push_back(shift_block(block, n));
      }
    }
    if (!rest.blocks.empty() || !emitted) cc.circuit.layers.push_back(std::move(rest));
  }
  cc.circuit.validate();
  return cc;
}

}  // namespace

std::size_t ConditionalCircuit::controlled_rotation_count() const {
  std::size_t count = 0;
  for (const ir::Layer& layer : circuit.layers) {
    for (const ir::Block& b : layer.blocks) {
      if (const auto* f = std::get_if<ir::FixedBlock>(&b)) {
        count += sim::is_rotation(f->gate.kind) && f->gate.is_controlled();
      }
    }
  }
  return count;
}

void ProductDistribution::validate(const ControlLayout& layout) const {
  if (registers.size() != layout.registers.size()) {
    throw InvalidArgument("distribution has " + std::to_string(registers.size()) +
                          " registers, layout has " + std::to_string(layout.registers.size()));
  }
  for (std::size_t k = 0; k < registers.size(); ++k) {
    const auto& p = registers[k];
    if (p.size() != layout.grid_size(static_cast<int>(k))) {
      throw InvalidArgument("distribution register " + std::to_string(k) + " has " +
                            std::to_string(p.size()) + " entries, expected " +
                            std::to_string(layout.grid_size(static_cast<int>(k))));
    }
    double total = 0.0;
    for (double v : p) {
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument("distribution has a negative or non-finite probability");
      }
      total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw InvalidArgument("distribution register " + std::to_string(k) + " sums to " +
                            std::to_string(total));
    }
  }
}

std::vector<double> ProductDistribution::joint() const {
  std::vector<double> out{1.0};
  for (const auto& p : registers) {
    std::vector<double> next;
    next.reserve(out.size() * p.size());
    for (double a : out) {
      for (double b : p) next.push_back(a * b);
    }
    out = std::move(next);
  }
  return out;
}

ProductDistribution ProductDistribution::uniform(const ControlLayout& layout) {
  ProductDistribution d;
  for (int k = 0; k < layout.num_features(); ++k) {
    const auto size = layout.grid_size(k);
    d.registers.emplace_back(size, 1.0 / static_cast<double>(size));
  }
  return d;
}

ProductDistribution ProductDistribution::point(const ControlLayout& layout,
                                               const std::vector<std::uint64_t>& indices) {
  if (indices.size() != layout.registers.size()) {
    throw InvalidArgument("point distribution needs one index per register");
  }
  ProductDistribution d;
  for (int k = 0; k < layout.num_features(); ++k) {
    std::vector<double> p(layout.grid_size(k), 0.0);
    p.at(indices[static_cast<std::size_t>(k)]) = 1.0;
    d.registers.push_back(std::move(p));
  }
  return d;
}

ConditionalCircuit make_conditional(const ir::Circuit& circuit, const ControlLayout& layout) {
  return build(circuit, layout,
               [&](const ir::EncodingBlock& e, int n, std::vector<ir::Layer>& out) {
                 const Register& reg = layout.registers[static_cast<std::size_t>(e.feature)];
                 // Most significant bit first.
                 for (int j = reg.size - 1; j >= 0; --j) {
                   const double angle = reg.step * std::ldexp(1.0, j);
                   out.push_back(ir::Layer{{ir::FixedBlock{sim::GateOp::controlled_rotation(
                       e.axis, {layout.bit_qubit(e.feature, j)}, e.target + n, angle)}}});
                 }
               });
}

ConditionalCircuit trivial_conditional(const ir::Circuit& circuit,
                                       const std::vector<std::vector<DataPoint>>& data,
                                       const ControlLayout& layout) {
  if (data.size() != layout.registers.size()) {
    throw InvalidArgument("trivial construction needs one data set per register");
  }
  for (std::size_t k = 0; k < data.size(); ++k) {
    std::vector<std::uint64_t> seen;
    for (const DataPoint& d : data[k]) {
      if (d.index >= layout.grid_size(static_cast<int>(k))) {
        throw InvalidArgument("data point index exceeds the register");
      }
      if (!std::isfinite(d.value)) throw InvalidArgument("data point value is not finite");
      seen.push_back(d.index);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
      throw InvalidArgument("duplicate bit pattern in data set " + std::to_string(k));
    }
  }
  return build(
      circuit, layout, [&](const ir::EncodingBlock& e, int n, std::vector<ir::Layer>& out) {
        const int k = e.feature;
        const int size = layout.registers[static_cast<std::size_t>(k)].size;
        for (const DataPoint& d : data[static_cast<std::size_t>(k)]) {
          std::vector<int> controls;
          ir::Layer flips;
          for (int j = size - 1; j >= 0; --j) {
            const int q = layout.bit_qubit(k, j);
            controls.push_back(q);
            if (!((d.index >> j) & 1U)) flips.blocks.push_back(ir::FixedBlock{sim::GateOp::x(q)});
          }
          if (!flips.blocks.empty()) out.push_back(flips);
          out.push_back(ir::Layer{{ir::FixedBlock{
              sim::GateOp::controlled_rotation(e.axis, controls, e.target + n, d.value)}}});
          if (!flips.blocks.empty()) out.push_back(std::move(flips));
        }
      });
}

std::vector<std::vector<DataPoint>> grid_data(const ControlLayout& layout) {
  std::vector<std::vector<DataPoint>> data;
  for (int k = 0; k < layout.num_features(); ++k) {
    std::vector<DataPoint> points;
    for (std::uint64_t i = 0; i < layout.grid_size(k); ++i) {
      points.push_back({i, layout.grid_value(k, i)});
    }
    data.push_back(std::move(points));
  }
  return data;
}

double conditional_expectation(const ConditionalCircuit& cc, const ProductDistribution& dist,
                               std::span<const double> theta,
                               const std::optional<sim::Observable>& observable) {
  dist.validate(cc.layout);
  const int n = cc.layout.control_qubits();
  const int m = cc.circuit.num_qubits - n;
  std::optional<sim::Observable> obs;
  if (observable) obs = observable->shifted(n);
  const train::CompiledCircuit model(cc.circuit, obs);

  const auto joint = dist.joint();
  std::vector<sim::Complex> amps(std::size_t{1} << cc.circuit.num_qubits, 0.0);
  for (std::size_t i = 0; i < joint.size(); ++i) {
    amps[i << m] = std::sqrt(joint[i]);
  }
  const auto initial = sim::Statevector::from_amplitudes(std::move(amps), false);
  return model.evaluate_from(initial, {}, theta);
}

double weighted_sum(const ir::Circuit& circuit, const ControlLayout& layout,
                    const ProductDistribution& dist, std::span<const double> theta,
                    const std::optional<sim::Observable>& observable) {
  check_compatible(circuit, layout);
  dist.validate(layout);
  const train::CompiledCircuit model(circuit, observable);
  const auto joint = dist.joint();
  const int k_count = layout.num_features();
  std::vector<double> x(static_cast<std::size_t>(k_count));
  double total = 0.0;
  for (std::size_t i = 0; i < joint.size(); ++i) {
    if (joint[i] == 0.0) continue;
    // Split the joint index into per-register indices, last register lowest.
    std::uint64_t rest = i;
    for (int k = k_count - 1; k >= 0; --k) {
      const int size = layout.registers[static_cast<std::size_t>(k)].size;
      const std::uint64_t idx = rest & ((std::uint64_t{1} << size) - 1);
      rest >>= size;
      x[static_cast<std::size_t>(k)] = layout.grid_value(k, idx);
    }
    total += joint[i] * model.evaluate(x, theta);
  }
  return total;
}

PropositionReport verify_proposition(const ir::Circuit& circuit, const ControlLayout& layout,
                                     const ProductDistribution& dist,
                                     std::span<const double> theta, double tol) {
  return verify_proposition(circuit, make_conditional(circuit, layout), dist, theta, tol);
}

PropositionReport verify_proposition(const ir::Circuit& circuit, const ConditionalCircuit& cc,
                                     const ProductDistribution& dist,
                                     std::span<const double> theta, double tol) {
  PropositionReport r;
  r.lhs = weighted_sum(circuit, cc.layout, dist, theta);
  r.rhs = conditional_expectation(cc, dist, theta);
  r.delta = std::abs(r.lhs - r.rhs);
  r.pass = std::isfinite(r.delta) && r.delta < tol;
  return r;
}

}  // namespace cpqc::cond
