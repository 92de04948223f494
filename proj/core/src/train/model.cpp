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

#include "cpqc/train/model.hpp"

#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::train {

LabelScale LabelScale::to_unit(double lo, double hi) {
  if (!(hi > lo)) return LabelScale{1.0, -1.0 - lo};
  const double a = 2.0 / (hi - lo);
  return LabelScale{a, -1.0 - a * lo};
}

void TrainingProblem::validate() const {
  if (features.size() != labels.size() || labels.empty()) {
    throw InvalidArgument("training problem: need |X| == |Y| >= 1, got " +
                          std::to_string(features.size()) + " and " +
                          std::to_string(labels.size()));
  }
  for (const auto& row : features) {
    if (row.size() != features.front().size()) {
      throw InvalidArgument("training problem: feature rows differ in length");
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw InvalidArgument("training problem: non-finite feature");
    }
  }
  for (double y : labels) {
    if (!std::isfinite(y) || std::abs(y) > 1.0 + 1e-12) {
      throw InvalidArgument("training problem: scaled label outside [-1, 1]");
    }
  }
}

CompiledCircuit::CompiledCircuit(const ir::Circuit& circuit,
                                 std::optional<sim::Observable> observable)
    : num_qubits_(circuit.num_qubits),
      num_params_(circuit.num_params),
      num_features_(circuit.num_features),
      shiftable_(static_cast<std::size_t>(circuit.num_params), true),
      observable_(observable ? std::move(*observable) : circuit.observable()) {
  circuit.validate();
  for (const auto& term : observable_.terms) {
    if (term.qubit < 0 || term.qubit >= num_qubits_) {
      throw InvalidArgument("observable qubit out of range");
    }
  }
  const auto mask = [&](int q) { return std::uint64_t{1} << (num_qubits_ - 1 - q); };
  for (const ir::Layer& layer : circuit.layers) {
    for (const ir::Block& block : layer.blocks) {
      Op op;
      if (const auto* e = std::get_if<ir::EncodingBlock>(&block)) {
        op.source = Source::Feature;
        op.axis = e->axis;
        op.index = e->feature;
        op.target = e->target;
      } else if (const auto* p = std::get_if<ir::ParamBlock>(&block)) {
        op.source = Source::Param;
        op.axis = p->axis;
        op.index = p->slot;
        op.target = p->target;
        for (int c : p->controls) op.control_mask |= mask(c);
        if (!p->controls.empty()) shiftable_[static_cast<std::size_t>(p->slot)] = false;
      } else {
        const auto& g = std::get<ir::FixedBlock>(block).gate;
        op.matrix = sim::gate_matrix(g);
        op.target = g.target;
        for (int c : g.controls) op.control_mask |= mask(c);
      }
      ops_.push_back(op);
    }
  }
}

void CompiledCircuit::run(std::vector<sim::Complex>& amps, std::span<const double> features,
                          std::span<const double> params) const {
  if (features.size() != static_cast<std::size_t>(num_features_) ||
      params.size() != static_cast<std::size_t>(num_params_)) {
    throw InvalidArgument("model: binding length mismatch (features " +
                          std::to_string(features.size()) + "/" + std::to_string(num_features_) +
                          ", params " + std::to_string(params.size()) + "/" +
                          std::to_string(num_params_) + ")");
  }
  const std::size_t dim = amps.size();
  sim::Complex* a = amps.data();
  for (const Op& op : ops_) {
    sim::Matrix2 m;
    switch (op.source) {
      case Source::Fixed: m = op.matrix; break;
      case Source::Feature:
        m = sim::rotation_matrix(op.axis, features[static_cast<std::size_t>(op.index)]);
        break;
      case Source::Param:
        m = sim::rotation_matrix(op.axis, params[static_cast<std::size_t>(op.index)]);
        break;
    }
    const std::size_t stride = std::size_t{1} << (num_qubits_ - 1 - op.target);
    const std::uint64_t cm = op.control_mask;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        if ((i & cm) != cm) continue;
        const sim::Complex u = a[i];
        const sim::Complex v = a[i + stride];
        a[i] = m[0] * u + m[1] * v;
        a[i + stride] = m[2] * u + m[3] * v;
      }
    }
  }
}

void CompiledCircuit::reset(std::vector<sim::Complex>& amps) const {
  amps.assign(std::size_t{1} << num_qubits_, sim::Complex{0.0, 0.0});
  amps[0] = 1.0;
}

double CompiledCircuit::measure(std::span<const sim::Complex> amps) const {
  double total = 0.0;
  for (const auto& term : observable_.terms) {
    const std::uint64_t mask = std::uint64_t{1} << (num_qubits_ - 1 - term.qubit);
    double value = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
      switch (term.axis) {
        case sim::Axis::Z:
          value += (i & mask) ? -std::norm(amps[i]) : std::norm(amps[i]);
          break;
        case sim::Axis::X:
          if (!(i & mask)) value += 2.0 * std::real(std::conj(amps[i]) * amps[i | mask]);
          break;
        case sim::Axis::Y:
          if (!(i & mask)) value += 2.0 * std::imag(std::conj(amps[i]) * amps[i | mask]);
          break;
      }
    }
    total += term.coefficient * value;
  }
  return total;
}

sim::Statevector CompiledCircuit::state(std::span<const double> features,
                                        std::span<const double> params) const {
  std::vector<sim::Complex> amps;
  reset(amps);
  run(amps, features, params);
  return sim::Statevector::from_amplitudes(std::move(amps), false);
}

sim::Statevector CompiledCircuit::apply(const sim::Statevector& initial,
                                        std::span<const double> features,
                                        std::span<const double> params) const {
  if (initial.num_qubits() != num_qubits_) {
    throw InvalidArgument("model: initial state has the wrong qubit count");
  }
  std::vector<sim::Complex> amps(initial.amplitudes().begin(), initial.amplitudes().end());
  run(amps, features, params);
  return sim::Statevector::from_amplitudes(std::move(amps), false);
}

double CompiledCircuit::evaluate_from(const sim::Statevector& initial,
                                      std::span<const double> features,
                                      std::span<const double> params) const {
  if (initial.num_qubits() != num_qubits_) {
    throw InvalidArgument("model: initial state has the wrong qubit count");
  }
  thread_local std::vector<sim::Complex> scratch;
  scratch.assign(initial.amplitudes().begin(), initial.amplitudes().end());
  run(scratch, features, params);
  return measure(scratch);
}

double CompiledCircuit::evaluate(std::span<const double> features,
                                 std::span<const double> params) const {
  thread_local std::vector<sim::Complex> scratch;
  reset(scratch);
  run(scratch, features, params);
  return measure(scratch);
}

double quantum_model(const ir::Circuit& circuit, std::span<const double> features,
                     std::span<const double> params,
                     const std::optional<sim::Observable>& observable) {
  return CompiledCircuit(circuit, observable).evaluate(features, params);
}

}  // namespace cpqc::train
