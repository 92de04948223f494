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
#include <optional>
#include <span>
#include <vector>

#include "cpqc/cond/layout.hpp"
#include "cpqc/ir/circuit.hpp"
#include "cpqc/sim/observable.hpp"

namespace cpqc::cond {

/// A CPQC: the control circuits are literal-angle controlled rotations
/// (FixedBlock) with controls in one register and the target in the target
/// register. Trainable blocks keep their slots, shifted onto the target
/// register, so theta is shared with the source PQC.
struct ConditionalCircuit {
  ControlLayout layout;
  /// n + m qubits, no features, measured qubits inside the target register.
  ir::Circuit circuit;

  /// Number of controlled rotations making up the control circuits.
  std::size_t controlled_rotation_count() const;
};

/// Independent per-register distributions p_k over 2^{n_k} grid points.
struct ProductDistribution {
  std::vector<std::vector<double>> registers;

  /// Throws InvalidArgument unless each vector is nonnegative, sums to 1
  /// within 1e-9 and matches the layout's register sizes.
  void validate(const ControlLayout& layout) const;
  /// Joint distribution over the concatenated control index.
  std::vector<double> joint() const;

  static ProductDistribution uniform(const ControlLayout& layout);
  /// Point mass at one grid index per register.
  static ProductDistribution point(const ControlLayout& layout,
                                   const std::vector<std::uint64_t>& indices);
};

/// Efficient construction: each encoding R_a(x_k) on target t becomes n_k
/// singly controlled rotations, bit j of register k applying
/// R_a(step_k * 2^j). Requires one register per feature and
/// layout.target_size == circuit.num_qubits.
ConditionalCircuit make_conditional(const ir::Circuit& circuit, const ControlLayout& layout);

/// One grid point of the trivial construction, given by its grid index and
/// the value it encodes.
struct DataPoint {
  std::uint64_t index = 0;
  double value = 0.0;
};

/// Trivial construction: for every data point of register k one rotation
/// R_a(value) controlled on the exact bit pattern of `index` (0-bits are
/// realised by X conjugation). Throws InvalidArgument on duplicate indices.
ConditionalCircuit trivial_conditional(const ir::Circuit& circuit,
                                       const std::vector<std::vector<DataPoint>>& data,
                                       const ControlLayout& layout);

/// Data points for the whole grid of every register in `layout`.
std::vector<std::vector<DataPoint>> grid_data(const ControlLayout& layout);

/// f_{C_n(U),P}(theta): amplitudes sqrt(p) loaded into the control
/// registers, CPQC applied, I_n (x) M read out. `observable` acts on the
/// target register (defaults to the source readout already stored in the
/// circuit).
double conditional_expectation(const ConditionalCircuit& cc, const ProductDistribution& dist,
                               std::span<const double> theta,
                               const std::optional<sim::Observable>& observable = std::nullopt);

/// sum_i p_i f_U(x_i, theta) over the joint grid.
double weighted_sum(const ir::Circuit& circuit, const ControlLayout& layout,
                    const ProductDistribution& dist, std::span<const double> theta,
                    const std::optional<sim::Observable>& observable = std::nullopt);

struct PropositionReport {
  double lhs = 0.0;  // classical weighted sum
  double rhs = 0.0;  // conditional expectation
  double delta = 0.0;
  bool pass = false;
};

/// Both sides of the encoding-equality identity and their gap.
PropositionReport verify_proposition(const ir::Circuit& circuit, const ControlLayout& layout,
                                     const ProductDistribution& dist,
                                     std::span<const double> theta, double tol = 1e-10);

/// Same check against an already built CPQC (which may have been edited).
PropositionReport verify_proposition(const ir::Circuit& circuit, const ConditionalCircuit& cc,
                                     const ProductDistribution& dist,
                                     std::span<const double> theta, double tol = 1e-10);

}  // namespace cpqc::cond
