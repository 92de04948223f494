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
#include <cstdint>
#include <span>
#include <vector>

#include "cpqc/sim/gate.hpp"

namespace cpqc::sim {

/// Dense statevector over `num_qubits` qubits.
///
/// Ordering: qubit 0 is the most significant bit of the basis index, so
/// |q0 q1 ... q_{n-1}> reads left to right as a binary number.
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(int num_qubits);

  static Statevector basis(int num_qubits, std::uint64_t index);

  /// Takes ownership of `amplitudes` (length must be a power of two).
  /// With check_norm the squared norm must be 1 within 1e-10; tests that
  /// need unnormalised vectors pass false.
  static Statevector from_amplitudes(std::vector<Complex> amplitudes,
                                     bool check_norm = true);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm_squared() const;
  double probability(std::size_t index) const;
  /// Probability that `qubit` reads 1.
  double probability_one(int qubit) const;

  /// Bit mask of `qubit` inside a basis index.
  std::uint64_t qubit_mask(int qubit) const {
    return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
  }

  /// Applies gate in place. Throws InvalidArgument on bad indices,
  /// overlapping control/target or non-finite angles.
  void apply(const GateOp& gate);

  /// Low-level kernel: `matrix` on `target` where all bits of
  /// `control_mask` are set. No validation.
  void apply_matrix(const Matrix2& matrix, int target,
                    std::uint64_t control_mask);

  friend bool operator==(const Statevector&, const Statevector&) = default;

 private:
  Statevector(int num_qubits, std::vector<Complex> amplitudes);

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

/// Checks indices and angle finiteness of `gate` against an n-qubit register.
void validate_gate(const GateOp& gate, int num_qubits);

/// U|psi> for the gate's (possibly controlled) unitary.
Statevector apply_gate(Statevector state, const GateOp& gate);

/// Lambda(c, U): `gate` applied where every qubit of `controls` is 1, in
/// addition to any controls the gate already carries. `controls` must be
/// non-empty and disjoint from the target.
Statevector apply_controlled(Statevector state, std::span<const int> controls,
                             const GateOp& gate);

/// Statevector with amplitudes sqrt(p_i). `probs` needs a power-of-two
/// length, non-negative entries and a sum within 1e-9 of one.
Statevector inject_amplitudes(std::span<const double> probs);

}  // namespace cpqc::sim
