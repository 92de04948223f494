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

#include "cpqc/ir/circuit.hpp"
#include "cpqc/sim/observable.hpp"
#include "cpqc/sim/statevector.hpp"

namespace cpqc::train {

/// Affine label map y' = a*y + b.
struct LabelScale {
  double a = 1.0;
  double b = 0.0;

  double apply(double y) const { return a * y + b; }
  double invert(double scaled) const { return (scaled - b) / a; }

  /// Maps [lo, hi] onto [-1, 1]. A degenerate range maps to the identity
  /// shifted so that lo lands on -1.
  static LabelScale to_unit(double lo, double hi);
};

struct TrainingProblem {
  std::vector<std::vector<double>> features;
  /// Labels already passed through `scale`.
  std::vector<double> labels;
  LabelScale scale;
  /// Readout; the circuit's mean-Z observable when unset.
  std::optional<sim::Observable> observable;

  /// Throws InvalidArgument unless |X| == |Y| >= 1, the feature rows share
  /// one length and labels are finite and inside [-1, 1].
  void validate() const;
  std::size_t size() const { return labels.size(); }
};

/// A circuit flattened into matrix-ready ops for repeated evaluation.
class CompiledCircuit {
 public:
  explicit CompiledCircuit(const ir::Circuit& circuit,
                           std::optional<sim::Observable> observable = std::nullopt);

  int num_qubits() const { return num_qubits_; }
  int num_params() const { return num_params_; }
  int num_features() const { return num_features_; }
  const sim::Observable& observable() const { return observable_; }

  /// Final state for one binding.
  sim::Statevector state(std::span<const double> features, std::span<const double> params) const;

  /// f_U(x, theta) = <psi|M|psi>.
  double evaluate(std::span<const double> features, std::span<const double> params) const;

  /// Runs the circuit on `initial` instead of |0...0>.
  sim::Statevector apply(const sim::Statevector& initial, std::span<const double> features,
                         std::span<const double> params) const;
  double evaluate_from(const sim::Statevector& initial, std::span<const double> features,
                       std::span<const double> params) const;

  /// True when slot `s` is an uncontrolled rotation, so the two-term shift
  /// rule is exact for it.
  bool shiftable(int slot) const { return shiftable_[static_cast<std::size_t>(slot)]; }

 private:
  enum class Source : std::uint8_t { Fixed, Feature, Param };
  struct Op {
    Source source = Source::Fixed;
    sim::Axis axis = sim::Axis::Z;
    int index = 0;
    int target = 0;
    std::uint64_t control_mask = 0;
    sim::Matrix2 matrix{};
  };

  /// Applies the ops in place; `amps` must already hold the input state.
  void run(std::vector<sim::Complex>& amps, std::span<const double> features,
           std::span<const double> params) const;
  void reset(std::vector<sim::Complex>& amps) const;
  double measure(std::span<const sim::Complex> amps) const;

  int num_qubits_ = 1;
  int num_params_ = 0;
  int num_features_ = 0;
  std::vector<Op> ops_;
  std::vector<bool> shiftable_;
  sim::Observable observable_;
};

/// f_U(x, theta) for the given observable (circuit readout if unset).
double quantum_model(const ir::Circuit& circuit, std::span<const double> features,
                     std::span<const double> params,
                     const std::optional<sim::Observable>& observable = std::nullopt);

}  // namespace cpqc::train
