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

#include "cpqc/sim/statevector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "cpqc/common/errors.hpp"

namespace cpqc::sim {
namespace {

constexpr int kMaxQubits = 30;

void check_qubit_count(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw InvalidArgument("Statevector: num_qubits must be in [1, " +
                          std::to_string(kMaxQubits) + "], got " +
                          std::to_string(num_qubits));
  }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_qubit_count(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
  Statevector state(num_qubits);
  if (index >= state.dimension()) {
    throw InvalidArgument("Statevector::basis: index out of range");
  }
  state.amplitudes_[0] = 0.0;
  state.amplitudes_[index] = 1.0;
  return state;
}

Statevector Statevector::from_amplitudes(std::vector<Complex> amplitudes,
                                         bool check_norm) {
  const std::size_t dim = amplitudes.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw InvalidArgument(
        "Statevector::from_amplitudes: length must be a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  check_qubit_count(n);
  Statevector state(n, std::move(amplitudes));
  if (check_norm && std::abs(state.norm_squared() - 1.0) > 1e-10) {
    throw InvalidArgument("Statevector::from_amplitudes: vector not normalised");
  }
  return state;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

double Statevector::probability(std::size_t index) const {
  if (index >= amplitudes_.size()) {
    throw InvalidArgument("Statevector::probability: index out of range");
  }
  return std::norm(amplitudes_[index]);
}

double Statevector::probability_one(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw InvalidArgument("Statevector::probability_one: qubit out of range");
  }
  const std::uint64_t mask = qubit_mask(qubit);
  double total = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) total += std::norm(amplitudes_[i]);
  }
  return total;
}

void validate_gate(const GateOp& gate, int num_qubits) {
  auto in_range = [num_qubits](int q) { return q >= 0 && q < num_qubits; };
  if (!in_range(gate.target)) {
    throw InvalidArgument("gate target " + std::to_string(gate.target) +
                          " out of range for " + std::to_string(num_qubits) +
                          " qubits");
  }
  std::uint64_t seen = std::uint64_t{1} << gate.target;
  for (int c : gate.controls) {
    if (!in_range(c)) {
      throw InvalidArgument("gate control " + std::to_string(c) +
                            " out of range for " + std::to_string(num_qubits) +
                            " qubits");
    }
    const std::uint64_t bit = std::uint64_t{1} << c;
    if (seen & bit) {
      throw InvalidArgument("gate controls overlap the target or repeat (qubit " +
                            std::to_string(c) + ")");
    }
    seen |= bit;
  }
  if (!std::isfinite(gate.angle) || !std::isfinite(gate.phi) ||
      !std::isfinite(gate.lambda)) {
    throw InvalidArgument("gate angle is not finite");
  }
}

void Statevector::apply(const GateOp& gate) {
  validate_gate(gate, num_qubits_);
  std::uint64_t control_mask = 0;
  for (int c : gate.controls) control_mask |= qubit_mask(c);
  apply_matrix(gate_matrix(gate), gate.target, control_mask);
}

void Statevector::apply_matrix(const Matrix2& m, int target,
                               std::uint64_t control_mask) {
  const std::size_t stride = qubit_mask(target);
  const std::size_t dim = amplitudes_.size();
  Complex* amps = amplitudes_.data();
  for (std::size_t base = 0; base < dim; base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      if ((i & control_mask) != control_mask) continue;
      const Complex a = amps[i];
      const Complex b = amps[i + stride];
      amps[i] = m[0] * a + m[1] * b;
      amps[i + stride] = m[2] * a + m[3] * b;
    }
  }
}

Statevector apply_gate(Statevector state, const GateOp& gate) {
  state.apply(gate);
  return state;
}

Statevector apply_controlled(Statevector state, std::span<const int> controls,
                             const GateOp& gate) {
  if (controls.empty()) {
    throw InvalidArgument("apply_controlled: control set must be non-empty");
  }
  GateOp controlled = gate;
  controlled.controls.insert(controlled.controls.end(), controls.begin(),
                             controls.end());
  state.apply(controlled);
  return state;
}

Statevector inject_amplitudes(std::span<const double> probs) {
  const std::size_t dim = probs.size();
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw InvalidArgument(
        "inject_amplitudes: length must be a power of two >= 2");
  }
  double total = 0.0;
  for (double p : probs) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidArgument("inject_amplitudes: negative or non-finite probability");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw InvalidArgument("inject_amplitudes: probabilities sum to " +
                          std::to_string(total) + ", expected 1");
  }
  std::vector<Complex> amplitudes(dim);
  for (std::size_t i = 0; i < dim; ++i) amplitudes[i] = std::sqrt(probs[i]);
  return Statevector::from_amplitudes(std::move(amplitudes), false);
}

}  // namespace cpqc::sim
