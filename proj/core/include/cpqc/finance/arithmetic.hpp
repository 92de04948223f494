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

#include <cstdint>
#include <span>
#include <vector>

#include "cpqc/finance/market.hpp"
#include "cpqc/finance/problem.hpp"
#include "cpqc/sim/gate.hpp"
#include "cpqc/transpile/decompose.hpp"

namespace cpqc::finance {

struct ArithmeticOptions {
  /// Payoff rotation scale c~.
  double c_tilde = 0.05;
  /// Restore the comparator's carry ancillas to |0>.
  bool uncompute = true;
  /// Integer basket weights, proportional to the spec weights. Derived from
  /// the spec when empty.
  std::vector<int> integer_weights;
  /// Prepend a gate-level loader for these per-register distributions.
  std::vector<std::vector<double>> loader;
};

/// Gate-level comparison-and-rotation circuit with its register map.
///
/// Qubit order: underlying registers (first most significant), then the
/// weighted-sum register (baskets), the comparator flag, the payoff ancilla
/// and the work ancillas.
struct ArithmeticCircuit {
  transpile::GateCircuit circuit;
  int underlying_qubits = 0;
  /// Qubits of the value register compared against the strike, MSB first.
  std::vector<int> value_register;
  int flag = 0;
  int payoff_qubit = 0;
  int work_ancillas = 0;
  /// Integer weights per register (1 for a vanilla option).
  std::vector<int> weights;
  std::vector<int> register_sizes;
  /// Payoff variable X = x0 + x_step * V for value-register integer V.
  double x0 = 0.0;
  double x_step = 0.0;
  double x_max = 0.0;
  double strike = 0.0;
  /// Flag is raised iff V >= threshold, i.e. X > K.
  std::uint64_t threshold = 0;
  double c_tilde = 0.05;
  bool is_put = false;

  /// Qubits beyond the underlying registers.
  int ancilla_budget() const { return circuit.num_qubits - underlying_qubits; }
  /// Payoff variable for a joint index over the underlying registers.
  double value_at(std::uint64_t joint_index) const;
};

/// Ripple-carry comparator: flips `flag` iff the integer held in `value`
/// (MSB first) is >= threshold. Uses up to value.size() - 1 of `work`.
std::vector<sim::GateOp> comparator(std::span<const int> value, std::uint64_t threshold, int flag,
                                    std::span<const int> work, bool uncompute = true);

/// Adds `constant` into `sum` (MSB first) when `control` is |1>, by
/// controlled increments at each set bit. Uses up to sum.size() - 1 of
/// `work`, returned clean.
std::vector<sim::GateOp> controlled_add_constant(int control, std::uint64_t constant,
                                                 std::span<const int> sum,
                                                 std::span<const int> work);

/// Throws InvalidArgument for BasketVariable or non-integer basket weights.
ArithmeticCircuit build_arithmetic_circuit(const PayoffSpec& spec,
                                           const std::vector<PriceGrid>& grids,
                                           const ArithmeticOptions& options = {});

/// 1/2 - c~ + 2c~/(max X - K) sum_{X_i >= K} p_i (X_i - K) over the joint
/// distribution of the underlying registers.
double arithmetic_formula(const ArithmeticCircuit& ac, std::span<const double> joint);

/// Probability of |1> on the payoff ancilla after loading sqrt(joint) into
/// the underlying registers, by exact sparse simulation.
double simulate_payoff_probability(const ArithmeticCircuit& ac, std::span<const double> joint);

/// Expected payoff recovered from a payoff-ancilla probability.
double expected_payoff_from_probability(const ArithmeticCircuit& ac, double probability);

/// Worst-case gap between the simulated probability and the linear formula,
/// from |sin^2(y + pi/4) - 1/2 - y| <= (2/3)|y|^3 with |y| <= c~.
double sin_squared_residual(double c_tilde);

}  // namespace cpqc::finance
